#pragma once

#include <string>
#include <vector>

#include "onto/merge.hpp"
#include "onto/relations.hpp"

namespace onto {

struct ExpertMapping {
    struct Entry {
        std::string a;
        std::string b;
        Relation r;
    };
    std::vector<Entry> pairs;
    std::string source;
};

// Tab-separated gold file: label_a<TAB>label_b<TAB>glyph, '#' comments
// allowed. Duplicate (a, b) pairs are rejected.
ExpertMapping load_expert_mappings(const std::string& path);

enum class EvalMode { Strict, ExpertScoped };

struct ClassifiedResults {
    std::vector<Correspondence> correct;    // pair and relation match the gold set
    std::vector<Correspondence> incorrect;  // pair matches, relation differs
    std::vector<Correspondence> others;     // pair not in the gold set
};

// Pairs are compared after lemma-key normalization of the labels.
ClassifiedResults classify_results(const std::vector<Correspondence>& produced,
                                   const ExpertMapping& expert);

struct EvalReport {
    std::size_t correct = 0;
    std::size_t incorrect = 0;
    std::size_t others = 0;
    double precision = 1.0;
    double recall = 1.0;
    EvalMode mode = EvalMode::ExpertScoped;
};

// Expert-scoped: P = correct / (correct + incorrect); strict: P = correct /
// |produced|. R = correct / |expert| in both. 0/0 ratios evaluate to 1.
std::pair<double, double> precision_recall(const std::vector<Correspondence>& produced,
                                           const ExpertMapping& expert, EvalMode mode);

EvalReport evaluate(const std::vector<Correspondence>& produced,
                    const ExpertMapping& expert, EvalMode mode);

// Aligned table plus machine-readable key=value lines.
std::string report_to_text(const EvalReport& report);

}  // namespace onto
