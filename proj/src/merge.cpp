#include "onto/merge.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

namespace onto {

namespace {

std::string raw_from_label(const std::string& label) {
    std::string raw = label;
    std::replace(raw.begin(), raw.end(), ' ', '_');
    return raw;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Reachability over an adjacency set, used for cycle guards.
bool reaches(const std::map<std::string, std::set<std::string>>& up,
             const std::string& from, const std::string& to) {
    if (from == to) return true;
    std::vector<std::string> stack{from};
    std::set<std::string> seen{from};
    while (!stack.empty()) {
        std::string node = stack.back();
        stack.pop_back();
        auto it = up.find(node);
        if (it == up.end()) continue;
        for (const auto& next : it->second) {
            if (next == to) return true;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

}  // namespace

std::set<std::pair<int, int>> transitive_reduction(
    int node_count, const std::set<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> reach(node_count,
                                         std::vector<bool>(node_count, false));
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& [u, v] : edges) adj[u].push_back(v);

    // DFS closure per node.
    for (int s = 0; s < node_count; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
            }
        }
    }

    std::set<std::pair<int, int>> reduced;
    for (const auto& [u, v] : edges) {
        bool redundant = false;
        for (const auto& [u2, w] : edges) {
            if (u2 == u && w != v && reach[w][v]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.insert({u, v});
    }
    return reduced;
}

std::vector<std::vector<std::string>> collapse_equivalents(
    const RelationMatrix& cross, const RelationMatrix& within_a,
    const RelationMatrix& within_b) {
    std::vector<std::string> labels;
    auto add = [&](const std::vector<std::string>& ls) {
        for (const auto& l : ls)
            if (std::find(labels.begin(), labels.end(), l) == labels.end())
                labels.push_back(l);
    };
    for (const RelationMatrix* m : {&cross, &within_a, &within_b}) {
        add(m->rows);
        add(m->cols);
    }
    std::sort(labels.begin(), labels.end());

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

    UnionFind uf(labels.size());
    for (const RelationMatrix* m : {&cross, &within_a, &within_b}) {
        for (std::size_t i = 0; i < m->rows.size(); ++i)
            for (std::size_t j = 0; j < m->cols.size(); ++j)
                if (m->at(i, j) == Relation::Equivalence)
                    uf.unite(index.at(m->rows[i]), index.at(m->cols[j]));
    }

    std::map<int, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(labels[i]);

    std::vector<std::vector<std::string>> classes;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

Ontology build_hierarchy(
    const std::vector<std::vector<std::string>>& classes,
    const std::set<std::pair<int, int>>& spec_cells,
    const std::vector<std::pair<std::string, std::string>>& retained_edges,
    std::vector<std::string>* warnings) {
    const int n = static_cast<int>(classes.size());

    // Specialization cycles between classes mean the classifier produced an
    // inconsistent matrix; report the first one found.
    {
        std::vector<int> indegree(n, 0);
        for (const auto& [u, v] : spec_cells)
            if (u != v) ++indegree[v];
        std::vector<int> queue;
        for (int i = 0; i < n; ++i)
            if (indegree[i] == 0) queue.push_back(i);
        int seen = 0;
        std::vector<std::vector<int>> adj(n);
        for (const auto& [u, v] : spec_cells)
            if (u != v) adj[u].push_back(v);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            ++seen;
            for (int v : adj[u])
                if (--indegree[v] == 0) queue.push_back(v);
        }
        if (seen != n) {
            std::string msg = "specialization cycle between classes:";
            for (int i = 0; i < n; ++i)
                if (indegree[i] > 0) msg += " " + classes[i].front();
            throw MergeError(msg);
        }
    }

    std::set<std::pair<int, int>> cells;
    for (const auto& [u, v] : spec_cells)
        if (u != v) cells.insert({u, v});
    auto reduced = transitive_reduction(n, cells);

    Ontology out;
    std::map<std::string, int> label_class;
    for (int i = 0; i < n; ++i)
        for (const auto& member : classes[i]) label_class[member] = i;

    auto canonical_raw = [&](int i) { return raw_from_label(classes[i].front()); };

    for (int i = 0; i < n; ++i) {
        out.concepts.push_back(Concept::from_id(canonical_raw(i)));
        for (std::size_t k = 1; k < classes[i].size(); ++k) {
            std::string alias = raw_from_label(classes[i][k]);
            out.concepts.push_back(Concept::from_id(alias));
            out.axioms.push_back({AxiomKind::EquivalentClass, alias, canonical_raw(i)});
        }
    }

    std::map<std::string, std::set<std::string>> up;  // child id -> parent ids
    for (const auto& [u, v] : reduced)
        up[canonical_raw(u)].insert(canonical_raw(v));

    // Retained edges from the source ontologies, cycle-guarded, processed in
    // sorted order so drops are deterministic.
    auto retained = retained_edges;
    std::sort(retained.begin(), retained.end());
    retained.erase(std::unique(retained.begin(), retained.end()), retained.end());
    for (const auto& [child_label, parent_label] : retained) {
        auto ci = label_class.find(child_label);
        auto pi = label_class.find(parent_label);
        if (ci == label_class.end() || pi == label_class.end()) {
            if (warnings)
                warnings->push_back("retained edge (" + child_label + ", " + parent_label +
                                    ") references an unknown concept, dropped");
            continue;
        }
        if (ci->second == pi->second) continue;
        std::string child = canonical_raw(ci->second);
        std::string parent = canonical_raw(pi->second);
        if (up[child].count(parent)) continue;
        if (reaches(up, parent, child)) {
            if (warnings)
                warnings->push_back("retained edge (" + child_label + ", " + parent_label +
                                    ") would create a cycle, dropped");
            continue;
        }
        up[child].insert(parent);
    }

    // Parentless classes attach to the synthetic root.
    std::vector<std::string> roots;
    for (int i = 0; i < n; ++i) {
        std::string id = canonical_raw(i);
        if (id != kSyntheticRoot && up[id].empty()) roots.push_back(id);
    }
    if (!out.has_concept(kSyntheticRoot))
        out.concepts.push_back(Concept::from_id(kSyntheticRoot));
    for (const auto& id : roots) up[id].insert(kSyntheticRoot);

    for (const auto& [child, parents] : up)
        for (const auto& parent : parents) out.subclass_edges.emplace_back(child, parent);

    out.normalize();
    return out;
}

bool is_synthetic_root(const Ontology& o, const std::string& raw_id) {
    return raw_id == kSyntheticRoot && o.parents_of(raw_id).empty();
}

MergeResult merge(const Ontology& o1, const Ontology& o2, const wn::KnowledgeBase& kb,
                  const MergeOptions& options) {
    MergeResult result;

    std::vector<std::string> labels1, labels2, all;
    for (const auto& c : o1.concepts) labels1.push_back(c.label);
    for (const auto& c : o2.concepts) labels2.push_back(c.label);
    std::sort(labels1.begin(), labels1.end());
    std::sort(labels2.begin(), labels2.end());
    all = labels1;
    all.insert(all.end(), labels2.begin(), labels2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    RelationMatrix matrix = relation_matrix(all, all, kb);
    auto cell = [&](const std::string& a, const std::string& b) {
        return *matrix.lookup(a, b);
    };

    // Correspondences enumerate every ordered label pair, row-major.
    std::size_t seq = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            ++seq;
            std::ostringstream id;
            id << "m:" << std::setw(5) << std::setfill('0') << seq;
            result.correspondences.push_back({id.str(), a, b, cell(a, b)});
        }

    auto submatrix = [&](const std::vector<std::string>& rows,
                         const std::vector<std::string>& cols) {
        RelationMatrix m;
        m.rows = rows;
        m.cols = cols;
        for (const auto& a : rows)
            for (const auto& b : cols) m.cells.push_back(cell(a, b));
        return m;
    };
    auto classes = collapse_equivalents(submatrix(labels1, labels2),
                                        submatrix(labels1, labels1),
                                        submatrix(labels2, labels2));

    std::map<std::string, int> label_class;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& member : classes[i]) label_class[member] = static_cast<int>(i);

    std::set<std::pair<int, int>> spec_cells;
    for (const auto& a : all)
        for (const auto& b : all) {
            if (cell(a, b) != Relation::Specialization) continue;
            int ca = label_class.at(a);
            int cb = label_class.at(b);
            if (ca != cb) spec_cells.insert({ca, cb});
        }

    // Edges the knowledge base cannot judge keep their source location.
    // Synthetic-root attachments are not source assertions; the hierarchy
    // builder regenerates them for whatever ends up parentless.
    std::vector<std::pair<std::string, std::string>> retained;
    for (const Ontology* o : {&o1, &o2}) {
        for (const auto& [c, p] : o->subclass_edges) {
            if (is_synthetic_root(*o, p)) continue;
            std::string cl = display_label(c);
            std::string pl = display_label(p);
            if (cell(cl, pl) == Relation::Unknown) retained.emplace_back(cl, pl);
        }
    }

    result.merged = build_hierarchy(classes, spec_cells, retained, &result.warnings);
    if (o1.id.empty() || o2.id.empty())
        result.merged.id = o1.id.empty() ? o2.id : o1.id;
    else
        result.merged.id = o1.id + "+" + o2.id;

    auto canonical_of = [&](const std::string& label) {
        return raw_from_label(classes[label_class.at(label)].front());
    };

    for (const Ontology* o : {&o1, &o2}) {
        for (const auto& inst : o->instances)
            result.merged.instances.push_back(
                {inst.id, canonical_of(display_label(inst.concept_id))});
        for (const auto& ax : o->axioms) {
            if (ax.kind != AxiomKind::DisjointWith) continue;
            std::string a = canonical_of(display_label(ax.a));
            std::string b = canonical_of(display_label(ax.b));
            if (a != b) result.merged.axioms.push_back({AxiomKind::DisjointWith, a, b});
        }
    }

    if (options.emit_disjoint) {
        // Disjointness axioms between siblings only, to keep output readable.
        std::map<std::string, std::set<std::string>> children;
        for (const auto& [c, p] : result.merged.subclass_edges) children[p].insert(c);
        for (const auto& [parent, kids] : children) {
            for (const auto& a : kids)
                for (const auto& b : kids) {
                    if (a >= b) continue;
                    auto rel = matrix.lookup(display_label(a), display_label(b));
                    if (rel && *rel == Relation::Disjointness)
                        result.merged.axioms.push_back({AxiomKind::DisjointWith, a, b});
                }
        }
    }

    result.merged.normalize();
    return result;
}

std::string correspondences_to_tsv(const std::vector<Correspondence>& list) {
    std::ostringstream out;
    for (const auto& c : list) {
        if (c.r == Relation::Unknown) continue;
        out << c.c_id << '\t' << c.a << '\t' << c.b << '\t' << glyph(c.r) << '\n';
    }
    return out.str();
}

std::vector<Correspondence> read_correspondences(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open correspondence file " + path);
    std::vector<Correspondence> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string c_id, a, b, g;
        if (!std::getline(fields, c_id, '\t') || !std::getline(fields, a, '\t') ||
            !std::getline(fields, b, '\t') || !std::getline(fields, g))
            throw ParseError("expected c_id<TAB>a<TAB>b<TAB>glyph in " + path, lineno, 1);
        auto rel = g.size() == 1 ? relation_from_glyph(g[0]) : std::nullopt;
        if (!rel)
            throw ParseError("bad relation glyph '" + g + "' in " + path, lineno, 1);
        out.push_back({c_id, a, b, *rel});
    }
    return out;
}

}  // namespace onto
