#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "onto/eval.hpp"

using namespace onto;

namespace {

struct TempTsv {
    std::string path = "/tmp/onto_eval_test.tsv";
    explicit TempTsv(const std::string& content) {
        std::ofstream(path) << content;
    }
    ~TempTsv() { std::remove(path.c_str()); }
};

Correspondence corr(const std::string& a, const std::string& b, Relation r) {
    return {"m:00000", a, b, r};
}

}  // namespace

TEST_CASE("expert mappings load from glyph TSV") {
    TempTsv file("# comment line\nPerson\tAuthor\t>\nAgent\tPerson\t<\n");
    auto expert = load_expert_mappings(file.path);
    REQUIRE(expert.pairs.size() == 2);
    CHECK(expert.pairs[0].a == "Person");
    CHECK(expert.pairs[0].b == "Author");
    CHECK(expert.pairs[0].r == Relation::Generalization);
}

TEST_CASE("empty expert file loads as the empty mapping") {
    TempTsv file("");
    CHECK(load_expert_mappings(file.path).pairs.empty());
}

TEST_CASE("duplicate pairs and bad glyphs are load errors") {
    TempTsv dup("Person\tAuthor\t>\nPerson\tAuthor\t<\n");
    CHECK_THROWS_AS(load_expert_mappings(dup.path), ValidationError);
    TempTsv bad("Person\tAuthor\tZ\n");
    CHECK_THROWS_AS(load_expert_mappings(bad.path), ParseError);
}

TEST_CASE("classify_results splits produced mappings into three bins") {
    TempTsv file("Person\tAuthor\t>\nPerson\tAgent\t>\n");
    auto expert = load_expert_mappings(file.path);
    std::vector<Correspondence> produced = {
        corr("Person", "Author", Relation::Generalization),  // correct
        corr("Person", "Agent", Relation::Disjointness),     // incorrect
        corr("Agent", "Author", Relation::Disjointness),     // others
    };
    auto bins = classify_results(produced, expert);
    CHECK(bins.correct.size() == 1);
    CHECK(bins.incorrect.size() == 1);
    CHECK(bins.others.size() == 1);
    CHECK(bins.correct.size() + bins.incorrect.size() + bins.others.size() ==
          produced.size());
}

TEST_CASE("label comparison survives underscore and case differences") {
    TempTsv file("Corporate Body\tOrganization\t<\n");
    auto expert = load_expert_mappings(file.path);
    auto bins = classify_results(
        {corr("Corporate_Body", "organization", Relation::Specialization)}, expert);
    CHECK(bins.correct.size() == 1);
}

TEST_CASE("precision and recall in both modes") {
    TempTsv file("Person\tAuthor\t>\nPerson\tAgent\t>\nGroup\tAgent\t>\n");
    auto expert = load_expert_mappings(file.path);
    std::vector<Correspondence> produced = {
        corr("Person", "Author", Relation::Generalization),
        corr("Person", "Agent", Relation::Generalization),
        corr("Agent", "Author", Relation::Disjointness),  // others
    };
    auto [p_scoped, r_scoped] = precision_recall(produced, expert, EvalMode::ExpertScoped);
    CHECK(p_scoped == doctest::Approx(1.0));
    CHECK(r_scoped == doctest::Approx(2.0 / 3.0));

    auto [p_strict, r_strict] = precision_recall(produced, expert, EvalMode::Strict);
    CHECK(p_strict == doctest::Approx(2.0 / 3.0));
    CHECK(r_strict == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("degenerate denominators") {
    TempTsv file("Person\tAuthor\t>\n");
    auto expert = load_expert_mappings(file.path);
    auto [p, r] = precision_recall({}, expert, EvalMode::ExpertScoped);
    CHECK(p == doctest::Approx(1.0));  // vacuous
    CHECK(r == doctest::Approx(0.0));

    TempTsv empty_file("");
    auto empty = load_expert_mappings(empty_file.path);
    auto [p2, r2] = precision_recall({}, empty, EvalMode::Strict);
    CHECK(p2 == doctest::Approx(1.0));
    CHECK(r2 == doctest::Approx(1.0));
}

TEST_CASE("expert-scoped precision ignores additional others") {
    TempTsv file("Person\tAuthor\t>\n");
    auto expert = load_expert_mappings(file.path);
    std::vector<Correspondence> produced = {
        corr("Person", "Author", Relation::Generalization)};
    auto before = precision_recall(produced, expert, EvalMode::ExpertScoped);
    for (int i = 0; i < 5; ++i)
        produced.push_back(corr("X" + std::to_string(i), "Y", Relation::Disjointness));
    auto after = precision_recall(produced, expert, EvalMode::ExpertScoped);
    CHECK(before.first == after.first);
    CHECK(before.second == after.second);
}

TEST_CASE("recall never drops when correspondences are added") {
    TempTsv file("Person\tAuthor\t>\nGroup\tAgent\t>\n");
    auto expert = load_expert_mappings(file.path);
    std::vector<Correspondence> produced;
    double last = 0.0;
    std::vector<Correspondence> additions = {
        corr("A", "B", Relation::Disjointness),
        corr("Person", "Author", Relation::Generalization),
        corr("C", "D", Relation::Equivalence),
        corr("Group", "Agent", Relation::Generalization),
    };
    for (const auto& add : additions) {
        produced.push_back(add);
        auto [p, r] = precision_recall(produced, expert, EvalMode::ExpertScoped);
        CHECK(r >= last);
        last = r;
    }
}

TEST_CASE("report text carries machine-readable key=value lines") {
    TempTsv file("Person\tAuthor\t>\n");
    auto expert = load_expert_mappings(file.path);
    auto report = evaluate({corr("Person", "Author", Relation::Generalization)}, expert,
                           EvalMode::ExpertScoped);
    auto text = report_to_text(report);
    CHECK(text.find("P=1.000") != std::string::npos);
    CHECK(text.find("R=1.000") != std::string::npos);
    CHECK(text.find("correct=1") != std::string::npos);
}
