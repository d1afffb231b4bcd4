#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onto/errors.hpp"

namespace onto {

// Display label of an rdf:ID: underscores become spaces.
std::string display_label(std::string_view raw_id);

struct Concept {
    std::string id;     // raw rdf:ID value, e.g. "Corporate_Body"
    std::string label;  // display form, e.g. "Corporate Body"

    static Concept from_id(std::string raw);
};

struct Instance {
    std::string id;       // individual rdf:ID
    std::string concept_id;  // raw id of the typing class
};

enum class AxiomKind { Subclass, DisjointWith, EquivalentClass };

struct Axiom {
    AxiomKind kind;
    std::string a;  // owning/subject class (raw id)
    std::string b;  // object class (raw id)
};

// An OWL construct outside the handled subset; re-emitted verbatim on
// serialization, inside its owning class element (owner empty = top level).
struct UnhandledBlock {
    std::string owner;  // raw id of the owning class, or "" for top level
    std::string raw;    // original source text of the element
};

struct Violation {
    enum class Kind { DuplicateConcept, UnknownReference, Cycle, BadEdge };
    Kind kind;
    std::vector<std::string> concepts;  // offending concept ids / edge endpoints
    std::string message;
};

// In-memory ontology: named classes connected by subclass (is-a) edges,
// plus individuals and disjointness/equivalence axioms. Immutable by
// convention once built; all operations on it are pure.
struct Ontology {
    std::string id;  // source name
    std::vector<Concept> concepts;
    std::vector<std::pair<std::string, std::string>> subclass_edges;  // (child, parent)
    std::vector<Instance> instances;
    std::vector<Axiom> axioms;  // DisjointWith / EquivalentClass only
    std::vector<UnhandledBlock> unhandled;

    bool has_concept(std::string_view raw_id) const;
    const Concept* find_concept(std::string_view raw_id) const;
    const Concept* find_by_label(std::string_view label) const;
    std::vector<std::string> parents_of(std::string_view raw_id) const;
    std::vector<std::string> children_of(std::string_view raw_id) const;

    // Sorts concepts, edges, instances and axioms into canonical order.
    void normalize();
};

// Structural equality over the handled subset (unhandled blocks included).
bool structurally_equal(const Ontology& a, const Ontology& b);

// Parses an RDF/XML OWL document. Namespaces are matched by URI, not
// prefix. Classes referenced as subclass parents are declared implicitly;
// rdf:type and axiom targets must reference a known class. Throws
// ParseError (with position) on malformed XML and ValidationError when the
// result would break an ontology invariant (duplicate ids, cycles,
// unknown references).
Ontology parse_owl(std::string_view text, std::string name = "");

// Deterministic serialization; parse_owl(serialize_owl(o)) is structurally
// equal to o.
std::string serialize_owl(const Ontology& ontology);

// Empty result iff all ontology invariants hold.
std::vector<Violation> validate_ontology(const Ontology& ontology);

}  // namespace onto
