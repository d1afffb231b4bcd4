#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onto/owl.hpp"
#include "onto/wordnet.hpp"

namespace onto {

// How the target sense of an attachment was chosen:
//   Case1 - the parent has a single sense;
//   Case2 - the parent has several senses, selected by path similarity;
//   Case3 - single-sense parent of a concept with several parents.
enum class EnrichCase { Case1, Case2, Case3 };

struct Attachment {
    std::string lemma;         // lemma key of the missing concept
    std::string target_sense;  // synset id it attaches under
    EnrichCase case_applied;
    std::optional<double> similarity;  // present iff Case2
    std::string parent_label;          // merged-ontology parent that produced it
};

// Overlap between a merged-ontology path (labels, preprocessed here) and a
// knowledge-base hypernym path: the fraction of merged-path labels that some
// synset on the database path carries as a lemma.
double path_similarity(const std::vector<std::string>& merged_path,
                       const std::vector<const wn::Synset*>& kb_path);

// Plans where a knowledge-base-missing concept of the merged ontology should
// attach: one target per single-sense parent, all maximal-similarity senses
// of a multi-sense parent. The synthetic root never produces attachments;
// parents missing from the knowledge base are skipped with a warning.
// Attachments are deduplicated by target sense.
std::vector<Attachment> enrichment_plan(const wn::KnowledgeBase& kb,
                                        const Ontology& merged,
                                        const std::string& missing_label,
                                        std::vector<std::string>* warnings = nullptr);

// Turns a plan into overlay entries, one per missing lemma, aggregating its
// target senses. A lemma that meanwhile appeared in the knowledge base is
// skipped with a warning.
std::vector<wn::OverlayEntry> apply_enrichment(const wn::KnowledgeBase& kb,
                                               const std::vector<Attachment>& plan,
                                               const std::string& provenance,
                                               std::vector<std::string>* warnings = nullptr);

// Audit text: lemma, case, sense id, similarity.
std::string plan_to_text(const std::vector<Attachment>& plan);

}  // namespace onto
