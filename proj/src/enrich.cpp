#include "onto/enrich.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "onto/merge.hpp"
#include "onto/relations.hpp"
#include "onto/text.hpp"

namespace onto {

double path_similarity(const std::vector<std::string>& merged_path,
                       const std::vector<const wn::Synset*>& kb_path) {
    std::set<std::string> keys;
    for (const auto& label : merged_path) {
        try {
            keys.insert(preprocess_label(label));
        } catch (const PreprocessError&) {
        }
    }
    if (keys.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& key : keys) {
        bool found = std::any_of(kb_path.begin(), kb_path.end(),
                                 [&](const wn::Synset* s) { return s->has_lemma(key); });
        if (found) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(keys.size());
}

namespace {

// Every upward label path from `start` to a hierarchy root, excluding the
// synthetic root label. Paths start at `start` itself.
std::vector<std::vector<std::string>> upward_paths(const Ontology& o,
                                                   const std::string& start_id) {
    std::vector<std::vector<std::string>> paths;
    std::vector<std::string> current;
    std::set<std::string> on_path;

    std::function<void(const std::string&)> walk = [&](const std::string& id) {
        if (on_path.count(id)) return;
        const Concept* c = o.find_concept(id);
        if (!c) return;
        on_path.insert(id);
        current.push_back(c->label);
        std::vector<std::string> parents;
        for (const auto& p : o.parents_of(id))
            if (!is_synthetic_root(o, p)) parents.push_back(p);
        std::sort(parents.begin(), parents.end());
        if (parents.empty()) {
            paths.push_back(current);
        } else {
            for (const auto& p : parents) walk(p);
        }
        current.pop_back();
        on_path.erase(id);
    };
    walk(start_id);
    return paths;
}

}  // namespace

std::vector<Attachment> enrichment_plan(const wn::KnowledgeBase& kb,
                                        const Ontology& merged,
                                        const std::string& missing_label,
                                        std::vector<std::string>* warnings) {
    auto warn = [&](const std::string& msg) {
        if (warnings) warnings->push_back(msg);
    };

    const Concept* missing = merged.find_by_label(missing_label);
    if (!missing)
        throw Error("enrichment_plan: no concept labeled '" + missing_label + "'");

    std::string lemma;
    try {
        lemma = preprocess_label(missing_label);
    } catch (const PreprocessError& e) {
        throw Error(std::string("enrichment_plan: ") + e.what());
    }

    std::vector<std::string> parent_ids;
    for (const auto& p : merged.parents_of(missing->id))
        if (!is_synthetic_root(merged, p)) parent_ids.push_back(p);
    std::sort(parent_ids.begin(), parent_ids.end());

    const bool multi_parent = parent_ids.size() > 1;
    std::vector<Attachment> plan;
    std::set<std::string> planned_senses;
    bool any_parent_usable = false;

    for (const auto& parent_id : parent_ids) {
        const Concept* parent = merged.find_concept(parent_id);
        ResolvedLabel resolved = resolve_label(parent->label, kb);
        if (!resolved.ok()) {
            warn("parent '" + parent->label + "' of '" + missing_label +
                 "' is missing from the knowledge base, skipped");
            continue;
        }
        const auto& senses = resolved.senses;
        any_parent_usable = true;

        auto add = [&](const wn::Synset* sense, EnrichCase c, std::optional<double> sim) {
            if (!planned_senses.insert(sense->id).second) return;  // dedup across parents
            plan.push_back({lemma, sense->id, c, sim, parent->label});
        };

        if (senses.size() == 1) {
            add(senses.front(), multi_parent ? EnrichCase::Case3 : EnrichCase::Case1,
                std::nullopt);
            continue;
        }

        // Several senses: compare the merged-ontology path from the parent
        // upward with each sense's hypernym paths, keep all argmax senses.
        auto merged_paths = upward_paths(merged, parent_id);
        std::vector<double> best(senses.size(), 0.0);
        double overall = 0.0;
        for (std::size_t i = 0; i < senses.size(); ++i) {
            for (const auto& kb_path : kb.hypernym_paths(*senses[i]))
                for (const auto& merged_path : merged_paths)
                    best[i] = std::max(best[i], path_similarity(merged_path, kb_path));
            overall = std::max(overall, best[i]);
        }
        if (overall == 0.0) {
            // No path shares a lemma; fall back to the most frequent sense.
            warn("no path of '" + parent->label + "' resembles the merged hierarchy; '" +
                 missing_label + "' attaches to its first sense");
            add(senses.front(), EnrichCase::Case2, 0.0);
            continue;
        }
        for (std::size_t i = 0; i < senses.size(); ++i)
            if (best[i] == overall) add(senses[i], EnrichCase::Case2, best[i]);
    }

    if (!any_parent_usable)
        warn("no usable parent for '" + missing_label + "', empty enrichment plan");
    return plan;
}

std::vector<wn::OverlayEntry> apply_enrichment(const wn::KnowledgeBase& kb,
                                               const std::vector<Attachment>& plan,
                                               const std::string& provenance,
                                               std::vector<std::string>* warnings) {
    std::map<std::string, std::vector<std::string>> targets_by_lemma;
    std::vector<std::string> order;
    for (const auto& at : plan) {
        auto& targets = targets_by_lemma[at.lemma];
        if (targets.empty()) order.push_back(at.lemma);
        if (std::find(targets.begin(), targets.end(), at.target_sense) == targets.end())
            targets.push_back(at.target_sense);
    }

    std::vector<wn::OverlayEntry> entries;
    for (const auto& lemma : order) {
        if (!kb.lookup(lemma).empty()) {
            if (warnings)
                warnings->push_back("lemma '" + lemma +
                                    "' is already in the knowledge base, skipped");
            continue;
        }
        entries.push_back({lemma, targets_by_lemma[lemma], provenance});
    }
    return entries;
}

std::string plan_to_text(const std::vector<Attachment>& plan) {
    std::ostringstream out;
    for (const auto& at : plan) {
        out << at.lemma << '\t';
        switch (at.case_applied) {
            case EnrichCase::Case1: out << "case1"; break;
            case EnrichCase::Case2: out << "case2"; break;
            case EnrichCase::Case3: out << "case3"; break;
        }
        out << '\t' << at.target_sense << '\t';
        if (at.similarity)
            out << *at.similarity;
        else
            out << '-';
        out << "\tunder " << at.parent_label << '\n';
    }
    return out.str();
}

}  // namespace onto
