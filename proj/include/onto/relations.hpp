#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onto/wordnet.hpp"

namespace onto {

// The five semantic relations between two concept labels. Everything in
// this header is a pure function over an immutable knowledge base; matrix
// cells are independent and safe to compute concurrently.
enum class Relation {
    Equivalence,     // =
    Specialization,  // <  (first label is the narrower one)
    Generalization,  // >
    Disjointness,    // !
    Unknown,         // ?  (a label is missing from the knowledge base)
};

Relation dual(Relation r);
char glyph(Relation r);
std::optional<Relation> relation_from_glyph(char g);

// Raw knowledge-base facts about a label pair, before precedence is applied.
// spec/gen carry the minimal sense-pair path length when true.
struct EvidenceSet {
    bool eq = false;
    bool spec = false;
    bool gen = false;
    bool disj = false;
    int spec_depth = 0;
    int gen_depth = 0;
};

// Resolution of a label against the knowledge base: full lemma key first,
// Porter-stem fallback second.
struct ResolvedLabel {
    std::string key;                        // preprocessed lemma key
    std::vector<std::string> lemmas;        // matched database lemmas
    std::vector<const wn::Synset*> senses;  // in sense order
    bool ok() const { return !senses.empty(); }
};

ResolvedLabel resolve_label(const std::string& label, const wn::KnowledgeBase& kb);

// Both keys must resolve; callers short-circuit to Unknown otherwise.
EvidenceSet evidence(const std::string& a_key, const std::string& b_key,
                     const wn::KnowledgeBase& kb);

// Equivalence beats specialization/generalization beats disjointness; a pair
// with conflicting spec/gen evidence resolves to the shorter path, ties to
// lexicographic key order. In-vocabulary pairs without any evidence are
// reported as Disjointness ("not semantically related"). A label missing
// from the knowledge base makes the result Unknown, always.
Relation classify(const std::string& label_a, const std::string& label_b,
                  const wn::KnowledgeBase& kb);

struct RelationMatrix {
    std::vector<std::string> rows;  // labels from the first concept list
    std::vector<std::string> cols;
    std::vector<Relation> cells;  // row-major

    Relation at(std::size_t i, std::size_t j) const { return cells[i * cols.size() + j]; }
    std::optional<Relation> lookup(const std::string& row, const std::string& col) const;
};

RelationMatrix relation_matrix(const std::vector<std::string>& concepts_a,
                               const std::vector<std::string>& concepts_b,
                               const wn::KnowledgeBase& kb);

// Tab-separated export with a header row/column and one glyph per cell.
std::string matrix_to_tsv(const RelationMatrix& matrix);

}  // namespace onto
