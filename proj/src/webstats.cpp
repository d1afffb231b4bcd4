#include "onto/webstats.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace onto {

ReplayProvider::ReplayProvider(const std::string& cache_path) : path_(cache_path) {
    std::ifstream in(cache_path);
    if (!in) throw AcquireError("cannot open replay cache " + cache_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.rfind('\t');
        if (tab == std::string::npos)
            throw AcquireError(cache_path + ":" + std::to_string(lineno) +
                               ": expected phrase<TAB>count");
        try {
            cache_[line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw AcquireError(cache_path + ":" + std::to_string(lineno) +
                               ": bad count '" + line.substr(tab + 1) + "'");
        }
    }
}

std::uint64_t ReplayProvider::count(const std::string& phrase) {
    auto it = cache_.find(phrase);
    if (it == cache_.end())
        throw AcquireError("replay cache " + path_ + " has no entry for \"" + phrase +
                           "\"");
    return it->second;
}

namespace {

std::string normalize_ws_lower(const std::string& text) {
    std::string out;
    bool in_space = true;
    for (char raw : text) {
        unsigned char c = static_cast<unsigned char>(raw);
        if (std::isspace(c)) {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += static_cast<char>(std::tolower(c));
            in_space = false;
        }
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

CorpusProvider::CorpusProvider(const std::string& corpus_dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir))
        throw AcquireError("corpus directory " + corpus_dir + " does not exist");
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        all += buf.str();
        all += '\n';
    }
    normalized_text_ = normalize_ws_lower(all);
}

std::uint64_t CorpusProvider::count(const std::string& phrase) {
    std::string needle = normalize_ws_lower(phrase);
    if (needle.empty()) return 0;
    std::uint64_t n = 0;
    std::size_t pos = 0;
    while ((pos = normalized_text_.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += 1;
    }
    return n;
}

LiveProvider::LiveProvider(std::string endpoint, std::string key_env_var,
                           std::string cache_path, std::chrono::milliseconds delay)
    : endpoint_(std::move(endpoint)),
      key_env_var_(std::move(key_env_var)),
      cache_path_(std::move(cache_path)),
      delay_(delay) {}

std::uint64_t LiveProvider::count(const std::string& phrase) {
    if (!first_request_ && delay_.count() > 0) std::this_thread::sleep_for(delay_);
    first_request_ = false;

    auto scheme_end = endpoint_.find("://");
    if (scheme_end == std::string::npos)
        throw AcquireError("live endpoint must be an http(s) URL: " + endpoint_);
    auto path_begin = endpoint_.find('/', scheme_end + 3);
    std::string host = endpoint_.substr(0, path_begin);
    std::string path = path_begin == std::string::npos ? "/" : endpoint_.substr(path_begin);

    httplib::Client client(host);
    client.set_read_timeout(30, 0);
    httplib::Headers headers;
    if (!key_env_var_.empty()) {
        const char* key = std::getenv(key_env_var_.c_str());
        if (key && *key) headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    httplib::Params params{{"q", phrase}};
    auto res = client.Get(path, params, headers);
    if (!res)
        throw AcquireError("no response from " + endpoint_ + " for \"" + phrase + "\"");
    if (res->status != 200)
        throw AcquireError("HTTP " + std::to_string(res->status) + " from " + endpoint_ +
                           " for \"" + phrase + "\"");
    std::uint64_t n = 0;
    try {
        n = nlohmann::json::parse(res->body).at("count").get<std::uint64_t>();
    } catch (const std::exception& e) {
        throw AcquireError("bad response body for \"" + phrase + "\": " + e.what());
    }

    if (!cache_path_.empty()) {
        std::ofstream out(cache_path_, std::ios::app);
        out << phrase << '\t' << n << '\n';
    }
    return n;
}

std::string build_query(const std::string& missing_label,
                        const std::string& candidate_label) {
    if (missing_label.empty() || candidate_label.empty())
        throw Error("query labels must be non-empty");
    char first = static_cast<char>(std::tolower(static_cast<unsigned char>(candidate_label[0])));
    const char* article =
        (first == 'a' || first == 'e' || first == 'i' || first == 'o' || first == 'u')
            ? "an"
            : "a";
    return missing_label + " is " + article + " " + candidate_label;
}

std::vector<QueryResult> acquire_counts(const std::string& missing_label,
                                        const std::vector<std::string>& candidates,
                                        HitCountProvider& provider) {
    std::vector<QueryResult> results;
    results.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        QueryResult qr;
        qr.candidate = candidate;
        qr.query = build_query(missing_label, candidate);
        qr.count = provider.count(qr.query);  // failure aborts, no partial results
        results.push_back(std::move(qr));
    }
    return results;
}

std::uint64_t compute_threshold(const std::vector<QueryResult>& results) {
    if (results.empty()) throw Error("compute_threshold needs at least one result");
    std::vector<std::uint64_t> counts;
    counts.reserve(results.size());
    for (const auto& r : results) counts.push_back(r.count);
    std::sort(counts.rbegin(), counts.rend());
    if (counts.size() == 1) return 0;
    std::uint64_t best_diff = 0;
    std::uint64_t tau = counts.back();  // all equal: tau = the shared count
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
        std::uint64_t diff = counts[i] - counts[i + 1];
        if (diff > best_diff) {
            best_diff = diff;
            tau = counts[i + 1];
        }
    }
    return tau;
}

std::vector<std::string> select_hypernyms(const std::vector<QueryResult>& results,
                                          std::uint64_t tau) {
    std::vector<const QueryResult*> picked;
    for (const auto& r : results)
        if (r.count > tau) picked.push_back(&r);
    std::sort(picked.begin(), picked.end(), [](const QueryResult* x, const QueryResult* y) {
        if (x->count != y->count) return x->count > y->count;
        return x->candidate < y->candidate;
    });
    std::vector<std::string> out;
    for (const auto* r : picked) out.push_back(r->candidate);
    return out;
}

Ontology relocate_missing(const Ontology& merged, const std::string& missing_label,
                          const std::vector<std::string>& hypernym_labels,
                          std::vector<std::string>* warnings) {
    const Concept* missing = merged.find_by_label(missing_label);
    if (!missing)
        throw Error("relocate_missing: no concept labeled '" + missing_label + "'");
    if (hypernym_labels.empty()) {
        if (warnings)
            warnings->push_back("no hypernym suggestions for '" + missing_label +
                                "', hierarchy unchanged");
        return merged;
    }

    // Reachability over the current hierarchy for the cycle guard.
    auto descends = [&](const std::string& node, const std::string& ancestor) {
        std::vector<std::string> stack{ancestor};
        std::set<std::string> seen{ancestor};
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            if (cur == node) return true;
            for (const auto& child : merged.children_of(cur))
                if (seen.insert(child).second) stack.push_back(child);
        }
        return false;
    };

    std::vector<std::string> new_parents;
    for (const auto& label : hypernym_labels) {
        const Concept* target = merged.find_by_label(label);
        if (!target)
            throw Error("relocate_missing: no concept labeled '" + label + "'");
        if (target->id == missing->id) continue;
        if (descends(target->id, missing->id)) {
            if (warnings)
                warnings->push_back("suggested hypernym '" + label + "' is a descendant of '" +
                                    missing_label + "', skipped");
            continue;
        }
        new_parents.push_back(target->id);
    }
    if (new_parents.empty()) {
        if (warnings)
            warnings->push_back("every suggestion for '" + missing_label +
                                "' was skipped, hierarchy unchanged");
        return merged;
    }

    Ontology out = merged;
    out.subclass_edges.erase(
        std::remove_if(out.subclass_edges.begin(), out.subclass_edges.end(),
                       [&](const auto& e) { return e.first == missing->id; }),
        out.subclass_edges.end());
    for (const auto& parent : new_parents)
        out.subclass_edges.emplace_back(missing->id, parent);
    out.normalize();
    return out;
}

std::string report_to_text(const ThresholdReport& report) {
    std::ostringstream out;
    out << "missing concept: " << report.missing << '\n';
    for (const auto& r : report.results)
        out << "  \"" << r.query << "\" -> " << r.count << '\n';
    out << "tau: " << report.tau << '\n';
    out << "selected:";
    if (report.selected.empty()) out << " (none)";
    for (const auto& s : report.selected) out << ' ' << s;
    out << '\n';
    return out.str();
}

}  // namespace onto
