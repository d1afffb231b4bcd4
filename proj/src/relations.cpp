#include "onto/relations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "onto/text.hpp"

namespace onto {

Relation dual(Relation r) {
    switch (r) {
        case Relation::Specialization: return Relation::Generalization;
        case Relation::Generalization: return Relation::Specialization;
        default: return r;
    }
}

char glyph(Relation r) {
    switch (r) {
        case Relation::Equivalence: return '=';
        case Relation::Specialization: return '<';
        case Relation::Generalization: return '>';
        case Relation::Disjointness: return '!';
        case Relation::Unknown: return '?';
    }
    return '?';
}

std::optional<Relation> relation_from_glyph(char g) {
    switch (g) {
        case '=': return Relation::Equivalence;
        case '<': return Relation::Specialization;
        case '>': return Relation::Generalization;
        case '!': return Relation::Disjointness;
        case '?': return Relation::Unknown;
        default: return std::nullopt;
    }
}

ResolvedLabel resolve_label(const std::string& label, const wn::KnowledgeBase& kb) {
    ResolvedLabel r;
    try {
        r.key = preprocess_label(label);
    } catch (const PreprocessError&) {
        return r;  // unpreprocessable labels behave like missing ones
    }
    r.senses = kb.lookup(r.key);
    if (!r.senses.empty()) {
        r.lemmas.push_back(r.key);
        return r;
    }
    for (const auto& lemma : kb.lemmas_for_stem(stem_key(r.key))) {
        auto senses = kb.lookup(lemma);
        if (senses.empty()) continue;
        r.lemmas.push_back(lemma);
        r.senses.insert(r.senses.end(), senses.begin(), senses.end());
    }
    return r;
}

namespace {

bool is_upward(wn::PointerKind k) {
    return k == wn::PointerKind::Hypernym || k == wn::PointerKind::MemberHolonym ||
           k == wn::PointerKind::PartHolonym || k == wn::PointerKind::SubstanceHolonym;
}

// Minimal number of upward pointers (hypernym or holonym) from any sense in
// `from` to any sense in `to`; 0 when unreachable. Shared synsets do not
// count: the relation must be strictly upward.
int upward_distance(const std::vector<const wn::Synset*>& from,
                    const std::vector<const wn::Synset*>& to,
                    const wn::KnowledgeBase& kb) {
    std::set<std::string> goal;
    for (const auto* s : to) goal.insert(s->id);

    std::map<std::string, int> depth;
    std::deque<const wn::Synset*> queue;
    for (const auto* s : from) {
        depth[s->id] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const wn::Synset* s = queue.front();
        queue.pop_front();
        int d = depth[s->id];
        for (const auto& p : s->pointers) {
            if (!is_upward(p.kind)) continue;
            auto [it, fresh] = depth.emplace(p.target, d + 1);
            if (!fresh) continue;
            if (goal.count(p.target)) return d + 1;  // BFS: first hit is minimal
            queue.push_back(kb.find(p.target));
        }
    }
    return 0;
}

EvidenceSet evidence_resolved(const ResolvedLabel& a, const ResolvedLabel& b,
                              const wn::KnowledgeBase& kb) {
    EvidenceSet ev;

    // Equivalence: same key, same resolved lemma, or a shared synset.
    if (a.key == b.key) ev.eq = true;
    if (!ev.eq) {
        for (const auto& lemma : a.lemmas)
            if (std::find(b.lemmas.begin(), b.lemmas.end(), lemma) != b.lemmas.end()) {
                ev.eq = true;
                break;
            }
    }
    if (!ev.eq) {
        std::set<std::string> a_ids;
        for (const auto* s : a.senses) a_ids.insert(s->id);
        for (const auto* s : b.senses)
            if (a_ids.count(s->id)) {
                ev.eq = true;
                break;
            }
    }

    ev.spec_depth = upward_distance(a.senses, b.senses, kb);
    ev.spec = ev.spec_depth > 0;
    ev.gen_depth = upward_distance(b.senses, a.senses, kb);
    ev.gen = ev.gen_depth > 0;

    // Disjointness: an antonym sense pair, or distinct senses that are
    // direct hyponyms of a common synset.
    std::set<std::string> b_ids;
    for (const auto* s : b.senses) b_ids.insert(s->id);
    for (const auto* s : a.senses) {
        for (const auto& p : s->pointers)
            if (p.kind == wn::PointerKind::Antonym && b_ids.count(p.target))
                ev.disj = true;
    }
    if (!ev.disj) {
        std::set<std::string> a_parents;
        for (const auto* s : a.senses)
            for (const auto& t : s->targets(wn::PointerKind::Hypernym))
                a_parents.insert(t);
        for (const auto* s : b.senses) {
            for (const auto& t : s->targets(wn::PointerKind::Hypernym)) {
                if (!a_parents.count(t)) continue;
                // The shared parent must cover an a-sense distinct from s.
                for (const auto* as : a.senses) {
                    if (as->id == s->id) continue;
                    auto ups = as->targets(wn::PointerKind::Hypernym);
                    if (std::find(ups.begin(), ups.end(), t) != ups.end()) {
                        ev.disj = true;
                        break;
                    }
                }
                if (ev.disj) break;
            }
            if (ev.disj) break;
        }
    }
    return ev;
}

}  // namespace

EvidenceSet evidence(const std::string& a_key, const std::string& b_key,
                     const wn::KnowledgeBase& kb) {
    return evidence_resolved(resolve_label(a_key, kb), resolve_label(b_key, kb), kb);
}

Relation classify(const std::string& label_a, const std::string& label_b,
                  const wn::KnowledgeBase& kb) {
    ResolvedLabel a = resolve_label(label_a, kb);
    ResolvedLabel b = resolve_label(label_b, kb);
    if (!a.ok() || !b.ok()) return Relation::Unknown;

    EvidenceSet ev = evidence_resolved(a, b, kb);
    if (ev.eq) return Relation::Equivalence;
    if (ev.spec && ev.gen) {
        if (ev.spec_depth < ev.gen_depth) return Relation::Specialization;
        if (ev.gen_depth < ev.spec_depth) return Relation::Generalization;
        return a.key < b.key ? Relation::Specialization : Relation::Generalization;
    }
    if (ev.spec) return Relation::Specialization;
    if (ev.gen) return Relation::Generalization;
    // Disjointness proper, or "no relation" collapsed into it.
    return Relation::Disjointness;
}

std::optional<Relation> RelationMatrix::lookup(const std::string& row,
                                               const std::string& col) const {
    auto r = std::find(rows.begin(), rows.end(), row);
    auto c = std::find(cols.begin(), cols.end(), col);
    if (r == rows.end() || c == cols.end()) return std::nullopt;
    return at(r - rows.begin(), c - cols.begin());
}

RelationMatrix relation_matrix(const std::vector<std::string>& concepts_a,
                               const std::vector<std::string>& concepts_b,
                               const wn::KnowledgeBase& kb) {
    RelationMatrix m;
    m.rows = concepts_a;
    m.cols = concepts_b;
    m.cells.reserve(m.rows.size() * m.cols.size());
    for (const auto& a : m.rows)
        for (const auto& b : m.cols) m.cells.push_back(classify(a, b, kb));
    return m;
}

std::string matrix_to_tsv(const RelationMatrix& matrix) {
    std::ostringstream out;
    for (const auto& col : matrix.cols) out << '\t' << col;
    out << '\n';
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        out << matrix.rows[i];
        for (std::size_t j = 0; j < matrix.cols.size(); ++j)
            out << '\t' << glyph(matrix.at(i, j));
        out << '\n';
    }
    return out.str();
}

}  // namespace onto
