#pragma once

#include <string>
#include <vector>

#include "onto/owl.hpp"
#include "onto/relations.hpp"
#include "onto/wordnet.hpp"

namespace onto {

// A subclass edge whose asserted direction contradicts the knowledge base.
struct Conflict {
    std::string child;   // raw id
    std::string parent;  // raw id
    Relation kb_relation;
    enum class Disposition { Flip, Collapse, Keep } disposition;
};

// One entry per edge the knowledge base disagrees with: Flip when it holds
// the opposite direction, Collapse when the endpoints are equivalent, Keep
// (warning only) when it holds them disjoint. Edges it agrees with or
// cannot judge produce nothing.
std::vector<Conflict> detect_conflicts(const Ontology& o, const wn::KnowledgeBase& kb);

// Rebuilds the ontology's hierarchy from the knowledge base: equivalent
// concepts collapse, every kept edge agrees with the knowledge base, and
// concepts it does not know keep their original parents. The fixed point of
// this operation is itself.
Ontology resolve(const Ontology& o, const wn::KnowledgeBase& kb,
                 std::vector<std::string>* warnings = nullptr);

// Tab-separated report: child, parent, kb relation glyph, disposition.
std::string conflicts_to_tsv(const std::vector<Conflict>& conflicts);

}  // namespace onto
