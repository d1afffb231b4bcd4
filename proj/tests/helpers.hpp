#pragma once

#include <random>
#include <string>
#include <vector>

#include "onto/owl.hpp"
#include "onto/wordnet.hpp"

#ifndef ONTO_FIXTURE_DIR
#error "ONTO_FIXTURE_DIR must be defined by the build"
#endif

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(ONTO_FIXTURE_DIR) + "/" + name;
}

inline const onto::wn::KnowledgeBase& kb() {
    static onto::wn::KnowledgeBase instance =
        onto::wn::KnowledgeBase::load(fixture("wordnet"));
    return instance;
}

// Labels that resolve in the fixture database, used as vocabulary for
// randomly generated ontologies.
inline const std::vector<std::string>& fixture_vocabulary() {
    static std::vector<std::string> vocab = {
        "Agent",       "Artifact",    "Article",     "Association", "Author",
        "Book",        "Booklet",     "Collection",  "Concept",     "Conference",
        "Dissertation", "Document",   "Editor",      "Enterprise",  "Event",
        "Expression",  "Firm",        "Gathering",   "Group",       "Handbook",
        "Institution", "Item",        "Journal",     "Library",     "Magazine",
        "Manifestation", "Manual",    "Meeting",     "Object",      "Organization",
        "Periodical",  "Person",      "Place",       "Proceedings", "Publication",
        "Publisher",   "Record",      "Reference_Book", "Report",   "School",
        "Student",     "Thesis",      "Treatise",    "University",  "Volume",
        "Work",        "Worker",      "Writer",      "Writing",
    };
    return vocab;
}

// Random DAG-shaped ontology over the fixture vocabulary; optionally with a
// knowledge-base-missing concept mixed in.
inline onto::Ontology random_ontology(std::mt19937& rng, bool with_missing = false) {
    const auto& vocab = fixture_vocabulary();
    std::uniform_int_distribution<std::size_t> size_dist(2, 8);
    std::size_t n = size_dist(rng);

    std::vector<std::string> ids = vocab;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(n);
    if (with_missing) ids.push_back("Corporate_Body");

    onto::Ontology o;
    o.id = "random";
    for (const auto& id : ids) o.concepts.push_back(onto::Concept::from_id(id));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    // Edges only from earlier to later position keep the input acyclic.
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (coin(rng) < 0.25) o.subclass_edges.emplace_back(ids[i], ids[j]);
    o.normalize();
    return o;
}

}  // namespace testutil
