#include "onto/wordnet.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "onto/text.hpp"

namespace onto::wn {

namespace {

PointerKind pointer_kind_from_symbol(const std::string& symbol, const std::string& where) {
    if (symbol == "@" || symbol == "@i") return PointerKind::Hypernym;
    if (symbol == "~" || symbol == "~i") return PointerKind::Hyponym;
    if (symbol == "%m") return PointerKind::MemberMeronym;
    if (symbol == "%p") return PointerKind::PartMeronym;
    if (symbol == "%s") return PointerKind::SubstanceMeronym;
    if (symbol == "#m") return PointerKind::MemberHolonym;
    if (symbol == "#p") return PointerKind::PartHolonym;
    if (symbol == "#s") return PointerKind::SubstanceHolonym;
    if (symbol == "!") return PointerKind::Antonym;
    throw LoadError(where + ": unknown pointer symbol '" + symbol + "'");
}

PointerKind inverse_kind(PointerKind kind) {
    switch (kind) {
        case PointerKind::Hypernym: return PointerKind::Hyponym;
        case PointerKind::Hyponym: return PointerKind::Hypernym;
        case PointerKind::MemberMeronym: return PointerKind::MemberHolonym;
        case PointerKind::PartMeronym: return PointerKind::PartHolonym;
        case PointerKind::SubstanceMeronym: return PointerKind::SubstanceHolonym;
        case PointerKind::MemberHolonym: return PointerKind::MemberMeronym;
        case PointerKind::PartHolonym: return PointerKind::PartMeronym;
        case PointerKind::SubstanceHolonym: return PointerKind::SubstanceMeronym;
        case PointerKind::Antonym: return PointerKind::Antonym;
    }
    return kind;
}

bool header_line(const std::string& line) {
    return line.empty() || line[0] == ' ' || line[0] == '\t';
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

bool Synset::has_lemma(std::string_view lemma) const {
    return std::find(lemmas.begin(), lemmas.end(), lemma) != lemmas.end();
}

std::vector<std::string> Synset::targets(PointerKind kind) const {
    std::vector<std::string> out;
    for (const auto& p : pointers)
        if (p.kind == kind) out.push_back(p.target);
    return out;
}

std::vector<OverlayEntry> read_overlay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open overlay file " + path);
    std::vector<OverlayEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::string where = path + ":" + std::to_string(lineno);
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw LoadError(where + ": expected lemma<TAB>targets<TAB>provenance");
        OverlayEntry e;
        e.lemma = line.substr(0, t1);
        e.provenance = line.substr(t2 + 1);
        std::string targets = line.substr(t1 + 1, t2 - t1 - 1);
        std::string id;
        std::istringstream ids(targets);
        while (std::getline(ids, id, ','))
            if (!id.empty()) e.hypernym_targets.push_back(id);
        if (e.lemma.empty() || e.hypernym_targets.empty())
            throw LoadError(where + ": record needs a lemma and at least one target");
        entries.push_back(std::move(e));
    }
    return entries;
}

std::size_t write_overlay(const std::vector<OverlayEntry>& entries,
                          const std::string& path,
                          std::vector<std::string>* warnings) {
    std::vector<OverlayEntry> existing;
    if (std::ifstream probe(path); probe.good()) existing = read_overlay(path);

    auto key = [](const OverlayEntry& e) {
        auto ts = e.hypernym_targets;
        std::sort(ts.begin(), ts.end());
        std::string k = e.lemma;
        for (const auto& t : ts) k += "," + t;
        return k;
    };
    std::set<std::string> seen;
    for (const auto& e : existing) seen.insert(key(e));

    std::ofstream out(path, std::ios::app);
    if (!out) throw LoadError("cannot write overlay file " + path);
    std::size_t written = 0;
    for (const auto& e : entries) {
        if (!seen.insert(key(e)).second) {
            if (warnings)
                warnings->push_back("overlay record for '" + e.lemma +
                                    "' already present, skipped");
            continue;
        }
        out << e.lemma << '\t';
        for (std::size_t i = 0; i < e.hypernym_targets.size(); ++i) {
            if (i) out << ',';
            out << e.hypernym_targets[i];
        }
        out << '\t' << e.provenance << '\n';
        ++written;
    }
    return written;
}

KnowledgeBase KnowledgeBase::load(const std::string& dir,
                                  const std::vector<std::string>& overlay_paths) {
    KnowledgeBase kb;

    const std::string data_path = dir + "/data.noun";
    std::ifstream data(data_path);
    if (!data) throw LoadError("cannot open " + data_path);
    std::string line;
    int lineno = 0;
    while (std::getline(data, line)) {
        ++lineno;
        if (header_line(line)) continue;
        std::string where = data_path + ":" + std::to_string(lineno);
        auto bar = line.find('|');
        std::string fields = bar == std::string::npos ? line : line.substr(0, bar);
        auto toks = split_ws(fields);
        // offset lex_filenum ss_type w_cnt (word lex_id)+ p_cnt (ptr)*
        if (toks.size() < 6) throw LoadError(where + ": truncated synset record");
        Synset s;
        s.id = toks[0];
        if (bar != std::string::npos) {
            s.gloss = line.substr(bar + 1);
            while (!s.gloss.empty() && (s.gloss.front() == ' ')) s.gloss.erase(0, 1);
            while (!s.gloss.empty() && (s.gloss.back() == ' ')) s.gloss.pop_back();
        }
        std::size_t i = 3;
        int w_cnt = 0;
        try {
            w_cnt = std::stoi(toks[i], nullptr, 16);
        } catch (const std::exception&) {
            throw LoadError(where + ": bad word count '" + toks[i] + "'");
        }
        ++i;
        if (w_cnt <= 0) throw LoadError(where + ": synset has no words");
        for (int w = 0; w < w_cnt; ++w, i += 2) {
            if (i + 1 >= toks.size()) throw LoadError(where + ": word list truncated");
            std::string lemma = toks[i];
            std::transform(lemma.begin(), lemma.end(), lemma.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            s.lemmas.push_back(lemma);
        }
        if (i >= toks.size()) throw LoadError(where + ": missing pointer count");
        int p_cnt = 0;
        try {
            p_cnt = std::stoi(toks[i]);
        } catch (const std::exception&) {
            throw LoadError(where + ": bad pointer count '" + toks[i] + "'");
        }
        ++i;
        for (int p = 0; p < p_cnt; ++p, i += 4) {
            if (i + 3 >= toks.size()) throw LoadError(where + ": pointer list truncated");
            if (toks[i + 2] != "n") continue;  // noun database: cross-POS pointers skipped
            s.pointers.push_back({pointer_kind_from_symbol(toks[i], where), toks[i + 1]});
        }
        if (!kb.synsets_.emplace(s.id, s).second)
            throw LoadError(where + ": duplicate synset id " + s.id);
    }

    const std::string index_path = dir + "/index.noun";
    std::ifstream index(index_path);
    if (!index) throw LoadError("cannot open " + index_path);
    lineno = 0;
    while (std::getline(index, line)) {
        ++lineno;
        if (header_line(line)) continue;
        std::string where = index_path + ":" + std::to_string(lineno);
        auto toks = split_ws(line);
        // lemma pos synset_cnt p_cnt sym* sense_cnt tagsense_cnt offset+
        if (toks.size() < 6) throw LoadError(where + ": truncated index record");
        const std::string& lemma = toks[0];
        int synset_cnt = 0, p_cnt = 0;
        try {
            synset_cnt = std::stoi(toks[2]);
            p_cnt = std::stoi(toks[3]);
        } catch (const std::exception&) {
            throw LoadError(where + ": bad counts");
        }
        std::size_t off_begin = 4 + p_cnt + 2;
        if (off_begin + synset_cnt > toks.size())
            throw LoadError(where + ": offset list truncated");
        auto& senses = kb.lemma_index_[lemma];
        for (int k = 0; k < synset_cnt; ++k) {
            const std::string& id = toks[off_begin + k];
            if (!kb.synsets_.count(id))
                throw LoadError(where + ": sense " + id + " of '" + lemma +
                                "' not in data file");
            senses.push_back(id);
        }
    }

    std::size_t overlay_no = 0;
    for (const auto& path : overlay_paths) {
        for (const auto& entry : read_overlay(path)) {
            kb.apply_overlay(entry, ++overlay_no);
            kb.overlay_entries_.push_back(entry);
        }
    }

    kb.validate();
    kb.build_stem_index();
    return kb;
}

void KnowledgeBase::apply_overlay(const OverlayEntry& entry, std::size_t number) {
    const std::string id = "ovl:" + std::to_string(number);
    Synset s;
    s.id = id;
    s.lemmas.push_back(entry.lemma);
    s.gloss = entry.provenance;
    for (const auto& target : entry.hypernym_targets) {
        auto it = synsets_.find(target);
        if (it == synsets_.end())
            throw LoadError("overlay entry '" + entry.lemma +
                            "' references unknown synset " + target);
        s.pointers.push_back({PointerKind::Hypernym, target});
        it->second.pointers.push_back({PointerKind::Hyponym, id});
    }
    synsets_.emplace(id, std::move(s));
    lemma_index_[entry.lemma].push_back(id);
}

void KnowledgeBase::build_stem_index() {
    for (const auto& [lemma, ids] : lemma_index_)
        stem_index_[stem_key(lemma)].insert(lemma);
}

void KnowledgeBase::validate() const {
    // Pointer targets resolve; hypernym/hyponym pointers are mutual inverses.
    for (const auto& [id, s] : synsets_) {
        for (const auto& p : s.pointers) {
            auto it = synsets_.find(p.target);
            if (it == synsets_.end())
                throw LoadError("synset " + id + " points to unknown synset " + p.target);
            if (p.kind == PointerKind::Hypernym || p.kind == PointerKind::Hyponym) {
                PointerKind inv = inverse_kind(p.kind);
                const auto& back = it->second.pointers;
                bool found = std::any_of(back.begin(), back.end(), [&](const Pointer& q) {
                    return q.kind == inv && q.target == id;
                });
                if (!found)
                    throw LoadError("synset " + id + " -> " + p.target +
                                    " lacks the inverse pointer");
            }
        }
    }
    // Hypernym graph is acyclic and every synset reaches a root.
    // 0 = unvisited, 1 = in progress, 2 = done.
    std::map<std::string, int> state;
    std::function<void(const Synset&)> visit = [&](const Synset& s) {
        int& st = state[s.id];
        if (st == 2) return;
        if (st == 1) throw LoadError("hypernym cycle through synset " + s.id);
        st = 1;
        for (const auto& t : s.targets(PointerKind::Hypernym))
            visit(synsets_.at(t));
        st = 2;
    };
    for (const auto& [id, s] : synsets_) visit(s);
    // Acyclicity plus resolving pointers implies each hypernym chain ends at
    // some synset without hypernyms, i.e. a root.

    for (const auto& [lemma, ids] : lemma_index_)
        for (const auto& id : ids)
            if (!synsets_.count(id))
                throw LoadError("lemma '" + lemma + "' indexes unknown synset " + id);
}

const Synset* KnowledgeBase::find(const std::string& synset_id) const {
    auto it = synsets_.find(synset_id);
    return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<const Synset*> KnowledgeBase::lookup(const std::string& lemma) const {
    std::vector<const Synset*> out;
    auto it = lemma_index_.find(lemma);
    if (it == lemma_index_.end()) return out;
    for (const auto& id : it->second) out.push_back(&synsets_.at(id));
    return out;
}

std::vector<std::string> KnowledgeBase::lemmas_for_stem(const std::string& stem) const {
    auto it = stem_index_.find(stem);
    if (it == stem_index_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<const Synset*> KnowledgeBase::related(const Synset& synset,
                                                  PointerKind kind) const {
    std::vector<const Synset*> out;
    for (const auto& id : synset.targets(kind)) out.push_back(&synsets_.at(id));
    return out;
}

std::vector<std::vector<const Synset*>> KnowledgeBase::hypernym_paths(
    const Synset& synset) const {
    std::vector<std::vector<const Synset*>> paths;
    std::vector<const Synset*> current;
    std::function<void(const Synset&)> walk = [&](const Synset& s) {
        current.push_back(&s);
        auto ups = s.targets(PointerKind::Hypernym);
        if (ups.empty()) {
            paths.emplace_back(current.rbegin(), current.rend());
        } else {
            for (const auto& up : ups) walk(synsets_.at(up));
        }
        current.pop_back();
    };
    walk(synset);
    return paths;
}

std::vector<std::string> path_lemmas(const std::vector<const Synset*>& path) {
    std::vector<std::string> out;
    for (const Synset* s : path) out.push_back(s->lemmas.front());
    return out;
}

}  // namespace onto::wn
