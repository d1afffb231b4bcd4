#include "onto/conflict.hpp"

#include <sstream>

#include "onto/merge.hpp"

namespace onto {

std::vector<Conflict> detect_conflicts(const Ontology& o, const wn::KnowledgeBase& kb) {
    std::vector<Conflict> out;
    for (const auto& [child, parent] : o.subclass_edges) {
        Relation r = classify(display_label(child), display_label(parent), kb);
        switch (r) {
            case Relation::Generalization:
                out.push_back({child, parent, r, Conflict::Disposition::Flip});
                break;
            case Relation::Equivalence:
                out.push_back({child, parent, r, Conflict::Disposition::Collapse});
                break;
            case Relation::Disjointness:
                out.push_back({child, parent, r, Conflict::Disposition::Keep});
                break;
            default:
                break;  // agreement or missing concept
        }
    }
    return out;
}

Ontology resolve(const Ontology& o, const wn::KnowledgeBase& kb,
                 std::vector<std::string>* warnings) {
    // Resolving is merging with an empty second operand: the hierarchy is
    // rebuilt from the relation matrix over the ontology's own concepts.
    MergeResult result = merge(o, Ontology{}, kb);
    if (warnings)
        warnings->insert(warnings->end(), result.warnings.begin(), result.warnings.end());
    result.merged.id = o.id;
    return result.merged;
}

std::string conflicts_to_tsv(const std::vector<Conflict>& conflicts) {
    std::ostringstream out;
    for (const auto& c : conflicts) {
        const char* disposition = c.disposition == Conflict::Disposition::Flip ? "flip"
                                  : c.disposition == Conflict::Disposition::Collapse
                                      ? "collapse"
                                      : "keep";
        out << c.child << '\t' << c.parent << '\t' << glyph(c.kb_relation) << '\t'
            << disposition << '\n';
    }
    return out.str();
}

}  // namespace onto
