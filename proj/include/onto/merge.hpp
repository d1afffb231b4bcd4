#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onto/owl.hpp"
#include "onto/relations.hpp"
#include "onto/wordnet.hpp"

namespace onto {

// One cell of the merge outcome: relation r holds between concept (label) a
// and concept (label) b. Unknown entries mark pairs the knowledge base
// cannot decide; exports keep only committed relations.
struct Correspondence {
    std::string c_id;  // "m:<seq>", row-major over the sorted label matrix
    std::string a;
    std::string b;
    Relation r;
};

struct MergeOptions {
    bool emit_disjoint = false;  // add owl:disjointWith axioms for disjoint siblings
};

struct MergeResult {
    Ontology merged;
    std::vector<Correspondence> correspondences;
    std::vector<std::string> warnings;
};

// Merges two conflict-resolved ontologies: classifies every label pair,
// collapses equivalence classes, rebuilds the subclass hierarchy from the
// specialization cells (transitive reduction), and keeps the source parent
// edges of concepts the knowledge base does not know.
MergeResult merge(const Ontology& o1, const Ontology& o2, const wn::KnowledgeBase& kb,
                  const MergeOptions& options = {});

// Finest partition grouping labels connected by a chain of equivalence
// cells across the three matrices (union-find). Classes and their members
// are sorted; singleton classes included.
std::vector<std::vector<std::string>> collapse_equivalents(
    const RelationMatrix& cross, const RelationMatrix& within_a,
    const RelationMatrix& within_b);

// Builds the merged hierarchy: one concept per class (canonical label =
// lexicographically least member), edges = transitive reduction of
// spec_cells (pairs of class indices, (sub, super)), plus retained edges
// (label pairs) that do not create cycles. Parentless classes attach to the
// synthetic root "Thing". Throws MergeError on a specialization cycle.
Ontology build_hierarchy(const std::vector<std::vector<std::string>>& classes,
                         const std::set<std::pair<int, int>>& spec_cells,
                         const std::vector<std::pair<std::string, std::string>>& retained_edges,
                         std::vector<std::string>* warnings = nullptr);

// Transitive reduction of a DAG given as (from, to) index pairs.
std::set<std::pair<int, int>> transitive_reduction(
    int node_count, const std::set<std::pair<int, int>>& edges);

constexpr const char* kSyntheticRoot = "Thing";

// A concept plays the synthetic-root role if it is the parentless "Thing".
bool is_synthetic_root(const Ontology& o, const std::string& raw_id);

// Correspondence TSV: c_id, label a, label b, relation glyph. Unknown
// entries are abstentions and are not written.
std::string correspondences_to_tsv(const std::vector<Correspondence>& list);
std::vector<Correspondence> read_correspondences(const std::string& path);

}  // namespace onto
