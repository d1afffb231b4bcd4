#pragma once

#include <string>
#include <vector>

#include "onto/enrich.hpp"
#include "onto/merge.hpp"
#include "onto/webstats.hpp"

namespace onto {

struct PipelineOptions {
    MergeOptions merge;
    std::size_t candidate_limit = 0;  // 0 = no cap on statistics candidates
};

struct PipelineResult {
    Ontology resolved1;
    Ontology resolved2;
    Ontology merged;  // after relocation of missing concepts
    std::vector<Correspondence> correspondences;
    std::vector<ThresholdReport> threshold_reports;
    std::vector<std::string> warnings;
};

// Concepts of the merged ontology the knowledge base does not know,
// excluding the synthetic root; sorted by label.
std::vector<std::string> missing_concept_labels(const Ontology& merged,
                                                const wn::KnowledgeBase& kb);

// Knowledge-base-resolving candidate labels for hit-count queries: canonical
// merged concepts only (aliases and the synthetic root excluded), sorted.
std::vector<std::string> candidate_labels(const Ontology& merged,
                                          const wn::KnowledgeBase& kb);

// Steps 1-4: resolve both inputs, merge them, then locate each missing
// concept from phrase hit counts and relocate it in the hierarchy.
PipelineResult run_merge_pipeline(const Ontology& o1, const Ontology& o2,
                                  const wn::KnowledgeBase& kb,
                                  HitCountProvider& provider,
                                  const PipelineOptions& options = {});

struct EnrichmentResult {
    std::vector<Attachment> plan;
    std::vector<wn::OverlayEntry> entries;
    std::vector<std::string> warnings;
};

// Step 5: plan attachments for every missing concept of the merged ontology
// and turn them into overlay entries.
EnrichmentResult run_enrichment(const Ontology& merged, const wn::KnowledgeBase& kb,
                                const std::string& provenance);

// The produced-mappings view of a correspondence list: committed relations
// only (Unknown entries are abstentions).
std::vector<Correspondence> asserted_correspondences(
    const std::vector<Correspondence>& all);

}  // namespace onto
