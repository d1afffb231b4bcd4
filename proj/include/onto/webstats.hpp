#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "onto/owl.hpp"

namespace onto {

struct QueryResult {
    std::string query;      // exact phrase submitted
    std::string candidate;  // candidate hypernym label
    std::uint64_t count = 0;
};

struct ThresholdReport {
    std::string missing;  // display label of the missing concept
    std::vector<QueryResult> results;
    std::uint64_t tau = 0;
    std::vector<std::string> selected;  // descending count, then label
};

// Source of exact-phrase hit counts. Implementations declare their
// concurrency contract; acquire_counts honors it.
class HitCountProvider {
public:
    virtual ~HitCountProvider() = default;
    virtual std::uint64_t count(const std::string& phrase) = 0;
    virtual bool allows_concurrency() const { return true; }
    virtual std::chrono::milliseconds min_delay() const { return {}; }
};

// Deterministic provider backed by a phrase<TAB>count cache file; a phrase
// absent from the cache is an acquisition error.
class ReplayProvider : public HitCountProvider {
public:
    explicit ReplayProvider(const std::string& cache_path);
    std::uint64_t count(const std::string& phrase) override;

private:
    std::string path_;
    std::map<std::string, std::uint64_t> cache_;
};

// Counts case-insensitive exact-phrase occurrences (whitespace normalized)
// in every regular file under a directory.
class CorpusProvider : public HitCountProvider {
public:
    explicit CorpusProvider(const std::string& corpus_dir);
    std::uint64_t count(const std::string& phrase) override;

private:
    std::string normalized_text_;  // all files, lowercased, single spaces
};

// Queries a web-search endpoint that returns an estimated result count as
// JSON, and records every answer in a replay cache file. Sequential, with a
// fixed delay between requests.
class LiveProvider : public HitCountProvider {
public:
    // `endpoint` receives GET <endpoint>?q=<phrase>; the response must be a
    // JSON object with a numeric "count" field. The API key (if the variable
    // is set) is sent as a bearer token. `cache_path` is written through.
    LiveProvider(std::string endpoint, std::string key_env_var, std::string cache_path,
                 std::chrono::milliseconds delay = std::chrono::milliseconds(1000));
    std::uint64_t count(const std::string& phrase) override;
    bool allows_concurrency() const override { return false; }
    std::chrono::milliseconds min_delay() const override { return delay_; }

private:
    std::string endpoint_;
    std::string key_env_var_;
    std::string cache_path_;
    std::chrono::milliseconds delay_;
    bool first_request_ = true;
};

// "<missing> is a(n) <candidate>", article by first letter of the candidate.
std::string build_query(const std::string& missing_label,
                        const std::string& candidate_label);

// One result per candidate, in input order; any provider failure aborts the
// whole acquisition (no partial results).
std::vector<QueryResult> acquire_counts(const std::string& missing_label,
                                        const std::vector<std::string>& candidates,
                                        HitCountProvider& provider);

// Sorts counts descending and returns the lower count of the adjacent pair
// with the maximum difference; 0 for a single result.
std::uint64_t compute_threshold(const std::vector<QueryResult>& results);

// Candidates whose count strictly exceeds tau, descending count then label.
std::vector<std::string> select_hypernyms(const std::vector<QueryResult>& results,
                                          std::uint64_t tau);

// Replaces the missing concept's parent edges with one edge per selected
// hypernym; selections that would create a cycle are skipped with a warning,
// and an empty selection leaves the ontology unchanged.
Ontology relocate_missing(const Ontology& merged, const std::string& missing_label,
                          const std::vector<std::string>& hypernym_labels,
                          std::vector<std::string>* warnings = nullptr);

std::string report_to_text(const ThresholdReport& report);

}  // namespace onto
