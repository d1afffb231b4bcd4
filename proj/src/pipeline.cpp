#include "onto/pipeline.hpp"

#include <algorithm>
#include <set>

#include "onto/conflict.hpp"
#include "onto/relations.hpp"

namespace onto {

namespace {

std::set<std::string> alias_ids(const Ontology& o) {
    std::set<std::string> out;
    for (const auto& ax : o.axioms)
        if (ax.kind == AxiomKind::EquivalentClass) out.insert(ax.a);
    return out;
}

}  // namespace

std::vector<std::string> missing_concept_labels(const Ontology& merged,
                                                const wn::KnowledgeBase& kb) {
    std::vector<std::string> out;
    for (const auto& c : merged.concepts) {
        if (is_synthetic_root(merged, c.id)) continue;
        if (!resolve_label(c.label, kb).ok()) out.push_back(c.label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> candidate_labels(const Ontology& merged,
                                          const wn::KnowledgeBase& kb) {
    auto aliases = alias_ids(merged);
    std::vector<std::string> out;
    for (const auto& c : merged.concepts) {
        if (is_synthetic_root(merged, c.id)) continue;
        if (aliases.count(c.id)) continue;
        if (resolve_label(c.label, kb).ok()) out.push_back(c.label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PipelineResult run_merge_pipeline(const Ontology& o1, const Ontology& o2,
                                  const wn::KnowledgeBase& kb,
                                  HitCountProvider& provider,
                                  const PipelineOptions& options) {
    PipelineResult result;
    result.resolved1 = resolve(o1, kb, &result.warnings);
    result.resolved2 = resolve(o2, kb, &result.warnings);

    MergeResult merged = merge(result.resolved1, result.resolved2, kb, options.merge);
    result.correspondences = std::move(merged.correspondences);
    result.warnings.insert(result.warnings.end(), merged.warnings.begin(),
                           merged.warnings.end());
    result.merged = std::move(merged.merged);

    auto candidates = candidate_labels(result.merged, kb);
    if (options.candidate_limit > 0 && candidates.size() > options.candidate_limit)
        candidates.resize(options.candidate_limit);

    for (const auto& missing : missing_concept_labels(result.merged, kb)) {
        ThresholdReport report;
        report.missing = missing;
        report.results = acquire_counts(missing, candidates, provider);
        report.tau = candidates.empty() ? 0 : compute_threshold(report.results);
        report.selected = select_hypernyms(report.results, report.tau);
        result.merged =
            relocate_missing(result.merged, missing, report.selected, &result.warnings);
        result.threshold_reports.push_back(std::move(report));
    }
    return result;
}

EnrichmentResult run_enrichment(const Ontology& merged, const wn::KnowledgeBase& kb,
                                const std::string& provenance) {
    EnrichmentResult result;
    for (const auto& missing : missing_concept_labels(merged, kb)) {
        auto plan = enrichment_plan(kb, merged, missing, &result.warnings);
        result.plan.insert(result.plan.end(), plan.begin(), plan.end());
    }
    result.entries = apply_enrichment(kb, result.plan, provenance, &result.warnings);
    return result;
}

std::vector<Correspondence> asserted_correspondences(
    const std::vector<Correspondence>& all) {
    std::vector<Correspondence> out;
    for (const auto& c : all)
        if (c.r != Relation::Unknown) out.push_back(c);
    return out;
}

}  // namespace onto
