#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "onto/relations.hpp"
#include "onto/text.hpp"

using namespace onto;
using testutil::kb;

TEST_CASE("dual is an involution with the documented fixed points") {
    CHECK(dual(Relation::Equivalence) == Relation::Equivalence);
    CHECK(dual(Relation::Specialization) == Relation::Generalization);
    CHECK(dual(Relation::Generalization) == Relation::Specialization);
    CHECK(dual(Relation::Disjointness) == Relation::Disjointness);
    CHECK(dual(Relation::Unknown) == Relation::Unknown);
}

TEST_CASE("glyph round-trip") {
    for (Relation r : {Relation::Equivalence, Relation::Specialization,
                       Relation::Generalization, Relation::Disjointness, Relation::Unknown})
        CHECK(relation_from_glyph(glyph(r)) == r);
    CHECK_FALSE(relation_from_glyph('x').has_value());
}

TEST_CASE("evidence for the worked label pairs") {
    auto ev = evidence("student", "person", kb());
    CHECK(ev.spec);
    CHECK_FALSE(ev.gen);

    ev = evidence("student", "pupil", kb());
    CHECK(ev.eq);

    ev = evidence("book", "phone", kb());
    CHECK(ev.disj);  // distinct direct hyponyms of a shared synset
    CHECK_FALSE(ev.spec);

    ev = evidence("part", "whole", kb());
    CHECK(ev.disj);  // antonym pair

    // Literal pointer duality at evidence level.
    auto ab = evidence("publisher", "group", kb());
    auto ba = evidence("group", "publisher", kb());
    CHECK(ab.spec);
    CHECK(ba.gen);
    CHECK(ab.spec_depth == ba.gen_depth);
}

TEST_CASE("classify reproduces the worked examples") {
    CHECK(classify("Transport", "Car", kb()) == Relation::Generalization);
    CHECK(classify("Agent", "Person", kb()) == Relation::Specialization);
    CHECK(classify("Corporate Body", "Organization", kb()) == Relation::Unknown);
    CHECK(classify("Student", "Pupil", kb()) == Relation::Equivalence);
    CHECK(classify("Book", "Phone", kb()) == Relation::Disjointness);
    CHECK(classify("Person", "Agent", kb()) == Relation::Generalization);
    CHECK(classify("Conference", "Organization", kb()) == Relation::Specialization);
    CHECK(classify("Group", "University", kb()) == Relation::Generalization);
}

TEST_CASE("classify is reflexive for known labels, Unknown otherwise") {
    for (const auto& label : {"Person", "Organization", "Book", "Event"})
        CHECK(classify(label, label, kb()) == Relation::Equivalence);
    CHECK(classify("Corporate Body", "Corporate Body", kb()) == Relation::Unknown);
    CHECK(classify("TOC", "TOC", kb()) == Relation::Unknown);
}

TEST_CASE("missing labels always classify Unknown") {
    for (const auto& other : {"Person", "Organization", "Corporate Body", "Thing"}) {
        CHECK(classify("Corporate Body", other, kb()) == Relation::Unknown);
        CHECK(classify(other, "Corporate Body", kb()) == Relation::Unknown);
    }
    // Labels that preprocess to nothing behave like missing ones.
    CHECK(classify("The", "Person", kb()) == Relation::Unknown);
}

TEST_CASE("meronym chains count as specialization") {
    // wheel is part of car, car is a vehicle: holonym+hypernym chain.
    CHECK(classify("Wheel", "Car", kb()) == Relation::Specialization);
    CHECK(classify("Wheel", "Transport", kb()) == Relation::Specialization);
}

TEST_CASE("stemming fallback resolves inflected labels") {
    CHECK(classify("Universities", "Organization", kb()) == Relation::Specialization);
    CHECK(classify("Universities", "University", kb()) == Relation::Equivalence);
}

TEST_CASE("unrelated in-vocabulary labels collapse to disjointness") {
    CHECK(classify("Concept", "Place", kb()) == Relation::Disjointness);
    CHECK(classify("Agent", "Artifact", kb()) == Relation::Disjointness);
}

TEST_CASE("classify duality over every fixture label pair") {
    const auto& vocab = testutil::fixture_vocabulary();
    std::vector<std::string> labels;
    for (const auto& raw : vocab) labels.push_back(display_label(raw));
    labels.push_back("Corporate Body");
    labels.push_back("TOC");
    std::size_t pairs = 0;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            CHECK(classify(a, b, kb()) == dual(classify(b, a, kb())));
            ++pairs;
        }
    CHECK(pairs >= 2000);
}

TEST_CASE("relation matrix cells are classify results with dual transpose") {
    std::vector<std::string> a = {"Person", "Agent", "Corporate Body"};
    std::vector<std::string> b = {"Author", "Organization"};
    auto m = relation_matrix(a, b, kb());
    CHECK(*m.lookup("Person", "Author") == Relation::Generalization);
    CHECK(*m.lookup("Agent", "Organization") == Relation::Disjointness);
    CHECK(*m.lookup("Corporate Body", "Author") == Relation::Unknown);

    auto t = relation_matrix(b, a, kb());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            CHECK(m.at(i, j) == dual(t.at(j, i)));
}

TEST_CASE("single concept against itself is a 1x1 equivalence matrix") {
    auto m = relation_matrix({"Person"}, {"Person"}, kb());
    REQUIRE(m.cells.size() == 1);
    CHECK(m.at(0, 0) == Relation::Equivalence);
}

TEST_CASE("matrix TSV export uses the glyph alphabet") {
    auto m = relation_matrix({"Person", "Corporate Body"}, {"Agent", "Person"}, kb());
    std::string tsv = matrix_to_tsv(m);
    CHECK(tsv ==
          "\tAgent\tPerson\n"
          "Person\t>\t=\n"
          "Corporate Body\t?\t?\n");
}

TEST_CASE("conflicting evidence resolves by depth, then lexicographic order") {
    // Crafted database where alpha and beta subsume each other through
    // different sense pairs at equal depth.
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "onto_tie_wn";
    fs::create_directories(dir);
    std::ofstream(dir / "data.noun")
        << "00000001 03 n 01 root 0 002 ~ 00000003 n 0000 ~ 00000005 n 0000 | top\n"
        << "00000002 03 n 01 alpha 0 001 @ 00000003 n 0000 | alpha under beta\n"
        << "00000003 03 n 01 beta 0 002 @ 00000001 n 0000 ~ 00000002 n 0000 | beta top\n"
        << "00000004 03 n 01 beta 0 001 @ 00000005 n 0000 | beta under alpha\n"
        << "00000005 03 n 01 alpha 0 002 @ 00000001 n 0000 ~ 00000004 n 0000 | alpha top\n";
    std::ofstream(dir / "index.noun")
        << "alpha n 2 2 @ ~ 2 0 00000002 00000005\n"
        << "beta n 2 2 @ ~ 2 0 00000003 00000004\n"
        << "root n 1 1 ~ 1 0 00000001\n";
    auto tie_kb = wn::KnowledgeBase::load(dir.string());
    fs::remove_all(dir);

    auto ev = evidence("alpha", "beta", tie_kb);
    CHECK(ev.spec);
    CHECK(ev.gen);
    CHECK(ev.spec_depth == ev.gen_depth);
    CHECK(classify("alpha", "beta", tie_kb) == Relation::Specialization);
    CHECK(classify("beta", "alpha", tie_kb) == Relation::Generalization);

    // Unequal depths: the shorter path direction wins regardless of order.
    CHECK(classify("student", "person", testutil::kb()) == Relation::Specialization);
}
