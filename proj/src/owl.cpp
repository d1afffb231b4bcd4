#include "onto/owl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "onto/xml.hpp"

namespace onto {

namespace {

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";

using NsMap = std::map<std::string, std::string>;  // prefix -> URI ("" = default)

NsMap with_declarations(const NsMap& outer, const xml::Element& el) {
    NsMap ns = outer;
    for (const auto& a : el.attrs) {
        if (a.name == "xmlns") ns[""] = a.value;
        else if (a.name.rfind("xmlns:", 0) == 0) ns[a.name.substr(6)] = a.value;
    }
    return ns;
}

// Resolves "prefix:local" against the in-scope namespace map.
std::pair<std::string, std::string> expand(const std::string& name, const NsMap& ns) {
    auto colon = name.find(':');
    std::string prefix = colon == std::string::npos ? "" : name.substr(0, colon);
    std::string local = colon == std::string::npos ? name : name.substr(colon + 1);
    auto it = ns.find(prefix);
    return {it == ns.end() ? "" : it->second, local};
}

bool is_element(const xml::Element& el, const NsMap& ns, std::string_view uri,
                std::string_view local) {
    auto [u, l] = expand(el.name, ns);
    return u == uri && l == local;
}

// Finds an attribute by namespace URI + local name.
const std::string* ns_attr(const xml::Element& el, const NsMap& ns,
                           std::string_view uri, std::string_view local) {
    for (const auto& a : el.attrs) {
        if (a.name == "xmlns" || a.name.rfind("xmlns:", 0) == 0) continue;
        auto colon = a.name.find(':');
        if (colon == std::string::npos) continue;  // unprefixed attrs have no namespace
        auto [u, l] = expand(a.name, ns);
        if (u == uri && l == local) return &a.value;
    }
    return nullptr;
}

// Turns an rdf:resource / rdf:about value into a raw class id.
std::string resource_to_id(const std::string& value, const xml::Element& el) {
    auto hash = value.rfind('#');
    if (hash == std::string::npos) {
        if (value.empty())
            throw ParseError("empty resource reference", el.line, el.column);
        return value;  // bare name
    }
    std::string id = value.substr(hash + 1);
    if (id.empty())
        throw ParseError("resource reference '" + value + "' names no class",
                         el.line, el.column);
    return id;
}

std::string cycle_message(const std::vector<std::string>& cycle) {
    std::string msg = "subclass cycle: ";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) msg += " -> ";
        msg += cycle[i];
    }
    return msg;
}

// Returns one node set per subclass cycle (smallest-first order inside).
std::vector<std::vector<std::string>> find_cycles(const Ontology& o) {
    std::map<std::string, std::vector<std::string>> parents;
    for (const auto& [c, p] : o.subclass_edges) parents[c].push_back(p);

    std::vector<std::vector<std::string>> cycles;
    std::set<std::string> done;
    for (const auto& node : o.concepts) {
        if (done.count(node.id)) continue;
        // Iterative DFS with an explicit path for cycle extraction.
        std::vector<std::pair<std::string, std::size_t>> stack{{node.id, 0}};
        std::vector<std::string> path{node.id};
        std::set<std::string> on_path{node.id};
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& ps = parents[node];
            if (next < ps.size()) {
                std::string parent = ps[next++];
                if (on_path.count(parent)) {
                    auto begin = std::find(path.begin(), path.end(), parent);
                    std::vector<std::string> cycle(begin, path.end());
                    std::sort(cycle.begin(), cycle.end());
                    if (std::find(cycles.begin(), cycles.end(), cycle) == cycles.end())
                        cycles.push_back(cycle);
                    continue;
                }
                if (done.count(parent)) continue;
                stack.emplace_back(parent, 0);
                path.push_back(parent);
                on_path.insert(parent);
            } else {
                done.insert(node);
                on_path.erase(node);
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return cycles;
}

}  // namespace

std::string display_label(std::string_view raw_id) {
    std::string label(raw_id);
    std::replace(label.begin(), label.end(), '_', ' ');
    return label;
}

Concept Concept::from_id(std::string raw) {
    Concept c;
    c.label = display_label(raw);
    c.id = std::move(raw);
    return c;
}

bool Ontology::has_concept(std::string_view raw_id) const {
    return find_concept(raw_id) != nullptr;
}

const Concept* Ontology::find_concept(std::string_view raw_id) const {
    for (const auto& c : concepts)
        if (c.id == raw_id) return &c;
    return nullptr;
}

const Concept* Ontology::find_by_label(std::string_view label) const {
    for (const auto& c : concepts)
        if (c.label == label) return &c;
    return nullptr;
}

std::vector<std::string> Ontology::parents_of(std::string_view raw_id) const {
    std::vector<std::string> out;
    for (const auto& [c, p] : subclass_edges)
        if (c == raw_id) out.push_back(p);
    return out;
}

std::vector<std::string> Ontology::children_of(std::string_view raw_id) const {
    std::vector<std::string> out;
    for (const auto& [c, p] : subclass_edges)
        if (p == raw_id) out.push_back(c);
    return out;
}

void Ontology::normalize() {
    std::sort(concepts.begin(), concepts.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });
    std::sort(subclass_edges.begin(), subclass_edges.end());
    subclass_edges.erase(std::unique(subclass_edges.begin(), subclass_edges.end()),
                         subclass_edges.end());
    std::sort(instances.begin(), instances.end(),
              [](const Instance& a, const Instance& b) {
                  return std::tie(a.id, a.concept_id) < std::tie(b.id, b.concept_id);
              });
    instances.erase(std::unique(instances.begin(), instances.end(),
                                [](const Instance& a, const Instance& b) {
                                    return a.id == b.id && a.concept_id == b.concept_id;
                                }),
                    instances.end());
    auto axiom_key = [](const Axiom& x) { return std::tuple(x.kind, x.a, x.b); };
    std::sort(axioms.begin(), axioms.end(), [&](const Axiom& a, const Axiom& b) {
        return axiom_key(a) < axiom_key(b);
    });
    axioms.erase(std::unique(axioms.begin(), axioms.end(),
                             [&](const Axiom& a, const Axiom& b) {
                                 return axiom_key(a) == axiom_key(b);
                             }),
                 axioms.end());
}

bool structurally_equal(const Ontology& a, const Ontology& b) {
    Ontology x = a;
    Ontology y = b;
    x.normalize();
    y.normalize();
    if (x.concepts.size() != y.concepts.size()) return false;
    for (std::size_t i = 0; i < x.concepts.size(); ++i)
        if (x.concepts[i].id != y.concepts[i].id) return false;
    auto axioms_equal = [](const std::vector<Axiom>& p, const std::vector<Axiom>& q) {
        if (p.size() != q.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].kind != q[i].kind || p[i].a != q[i].a || p[i].b != q[i].b)
                return false;
        return true;
    };
    auto inst_equal = [](const std::vector<Instance>& p, const std::vector<Instance>& q) {
        if (p.size() != q.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].id != q[i].id || p[i].concept_id != q[i].concept_id) return false;
        return true;
    };
    auto unhandled_sorted = [](const Ontology& o) {
        auto u = o.unhandled;
        std::sort(u.begin(), u.end(), [](const UnhandledBlock& a, const UnhandledBlock& b) {
            return std::tie(a.owner, a.raw) < std::tie(b.owner, b.raw);
        });
        return u;
    };
    auto ux = unhandled_sorted(x);
    auto uy = unhandled_sorted(y);
    if (ux.size() != uy.size()) return false;
    for (std::size_t i = 0; i < ux.size(); ++i)
        if (ux[i].owner != uy[i].owner || ux[i].raw != uy[i].raw) return false;
    return x.subclass_edges == y.subclass_edges && inst_equal(x.instances, y.instances) &&
           axioms_equal(x.axioms, y.axioms);
}

Ontology parse_owl(std::string_view text, std::string name) {
    xml::Element root = xml::parse_document(text);
    NsMap ns = with_declarations({}, root);

    Ontology o;
    o.id = std::move(name);
    std::set<std::string> declared;
    std::set<std::string> referenced_as_parent;
    std::vector<std::string> typed_refs;  // ids that must end up declared

    auto declare = [&](const std::string& id) {
        if (declared.insert(id).second) o.concepts.push_back(Concept::from_id(id));
    };

    auto preserve = [&](const xml::Element& el, const std::string& owner = "") {
        o.unhandled.push_back(
            {owner, std::string(text.substr(el.src_begin, el.src_end - el.src_begin))});
    };

    auto class_id = [&](const xml::Element& el, const NsMap& scope) -> std::string {
        if (const auto* id = ns_attr(el, scope, kRdfNs, "ID")) return *id;
        if (const auto* about = ns_attr(el, scope, kRdfNs, "about"))
            return resource_to_id(*about, el);
        return "";  // anonymous class; preserved verbatim
    };

    for (const auto& child : root.children) {
        NsMap scope = with_declarations(ns, child);
        if (is_element(child, scope, kOwlNs, "Class")) {
            std::string id = class_id(child, scope);
            if (id.empty()) {
                preserve(child);
                continue;
            }
            if (declared.count(id))
                throw ValidationError("duplicate class id '" + id + "'");
            declare(id);
            for (const auto& sub : child.children) {
                NsMap inner = with_declarations(scope, sub);
                // Only the rdf:resource reference forms are interpreted;
                // nested class expressions stay verbatim like any other
                // construct outside the subset.
                const auto* res = ns_attr(sub, inner, kRdfNs, "resource");
                if (res && is_element(sub, inner, kRdfsNs, "subClassOf")) {
                    std::string parent = resource_to_id(*res, sub);
                    o.subclass_edges.emplace_back(id, parent);
                    referenced_as_parent.insert(parent);
                } else if (res && is_element(sub, inner, kOwlNs, "disjointWith")) {
                    std::string other = resource_to_id(*res, sub);
                    o.axioms.push_back({AxiomKind::DisjointWith, id, other});
                    typed_refs.push_back(other);
                } else if (res && is_element(sub, inner, kOwlNs, "equivalentClass")) {
                    std::string other = resource_to_id(*res, sub);
                    o.axioms.push_back({AxiomKind::EquivalentClass, id, other});
                    typed_refs.push_back(other);
                } else {
                    preserve(sub, id);
                }
            }
        } else if (is_element(child, scope, kOwlNs, "Thing")) {
            // Individuals: owl:Thing with rdf:ID whose children are all
            // rdf:type references; anything else is preserved verbatim.
            const auto* id = ns_attr(child, scope, kRdfNs, "ID");
            std::vector<Instance> pending;
            bool handled = id != nullptr && !child.children.empty();
            if (handled) {
                for (const auto& sub : child.children) {
                    NsMap inner = with_declarations(scope, sub);
                    const std::string* res;
                    if (is_element(sub, inner, kRdfNs, "type") &&
                        (res = ns_attr(sub, inner, kRdfNs, "resource")) != nullptr) {
                        pending.push_back({*id, resource_to_id(*res, sub)});
                    } else {
                        handled = false;
                        break;
                    }
                }
            }
            if (handled) {
                for (auto& inst : pending) {
                    typed_refs.push_back(inst.concept_id);
                    o.instances.push_back(std::move(inst));
                }
            } else {
                preserve(child);
            }
        } else {
            preserve(child);
        }
    }

    // Subclass parents may be introduced by reference alone.
    for (const auto& parent : referenced_as_parent) declare(parent);

    for (const auto& id : typed_refs) {
        if (!declared.count(id))
            throw ValidationError("reference to undeclared class '" + id + "'");
    }

    auto violations = validate_ontology(o);
    if (!violations.empty()) throw ValidationError(violations.front().message);
    o.normalize();
    return o;
}

std::string serialize_owl(const Ontology& ontology) {
    Ontology o = ontology;
    o.normalize();

    std::ostringstream out;
    out << "<?xml version=\"1.0\"?>\n"
        << "<rdf:RDF xmlns:rdf=\"" << kRdfNs << "\"\n"
        << "         xmlns:rdfs=\"" << kRdfsNs << "\"\n"
        << "         xmlns:owl=\"" << kOwlNs << "\">\n";
    for (const auto& node : o.concepts) {
        std::vector<std::string> body;
        for (const auto& [c, p] : o.subclass_edges)
            if (c == node.id)
                body.push_back("<rdfs:subClassOf rdf:resource=\"#" + xml::escape(p) +
                               "\"/>");
        for (const auto& ax : o.axioms) {
            if (ax.a != node.id) continue;
            if (ax.kind == AxiomKind::DisjointWith)
                body.push_back("<owl:disjointWith rdf:resource=\"#" + xml::escape(ax.b) +
                               "\"/>");
            else if (ax.kind == AxiomKind::EquivalentClass)
                body.push_back("<owl:equivalentClass rdf:resource=\"#" + xml::escape(ax.b) +
                               "\"/>");
        }
        for (const auto& u : o.unhandled)
            if (u.owner == node.id) body.push_back(u.raw);

        if (body.empty()) {
            out << "  <owl:Class rdf:ID=\"" << xml::escape(node.id) << "\"/>\n";
        } else {
            out << "  <owl:Class rdf:ID=\"" << xml::escape(node.id) << "\">\n";
            for (const auto& line : body) out << "    " << line << "\n";
            out << "  </owl:Class>\n";
        }
    }
    for (const auto& inst : o.instances) {
        out << "  <owl:Thing rdf:ID=\"" << xml::escape(inst.id) << "\">\n"
            << "    <rdf:type rdf:resource=\"#" << xml::escape(inst.concept_id) << "\"/>\n"
            << "  </owl:Thing>\n";
    }
    for (const auto& u : o.unhandled)
        if (u.owner.empty()) out << "  " << u.raw << "\n";
    out << "</rdf:RDF>\n";
    return out.str();
}

std::vector<Violation> validate_ontology(const Ontology& o) {
    std::vector<Violation> out;

    std::set<std::string> ids;
    for (const auto& c : o.concepts) {
        if (!ids.insert(c.id).second)
            out.push_back({Violation::Kind::DuplicateConcept,
                           {c.id},
                           "duplicate concept id '" + c.id + "'"});
        if (c.id.empty())
            out.push_back({Violation::Kind::BadEdge, {}, "empty concept id"});
    }

    for (const auto& [c, p] : o.subclass_edges) {
        if (!ids.count(c) || !ids.count(p))
            out.push_back({Violation::Kind::UnknownReference,
                           {c, p},
                           "edge (" + c + ", " + p + ") references an undeclared class"});
    }
    for (const auto& ax : o.axioms) {
        if (!ids.count(ax.a) || !ids.count(ax.b))
            out.push_back({Violation::Kind::UnknownReference,
                           {ax.a, ax.b},
                           "axiom (" + ax.a + ", " + ax.b + ") references an undeclared class"});
    }
    for (const auto& inst : o.instances) {
        if (!ids.count(inst.concept_id))
            out.push_back({Violation::Kind::UnknownReference,
                           {inst.concept_id},
                           "instance '" + inst.id + "' typed by undeclared class '" +
                               inst.concept_id + "'"});
    }

    for (const auto& cycle : find_cycles(o))
        out.push_back({Violation::Kind::Cycle, cycle, cycle_message(cycle)});

    return out;
}

}  // namespace onto
