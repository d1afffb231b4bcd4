#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "onto/eval.hpp"
#include "onto/pipeline.hpp"

#ifndef ONTO_CLI_PATH
#error "ONTO_CLI_PATH must be defined by the build"
#endif

using namespace onto;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(ONTO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string pipeline_args(const fs::path& out, const std::string& expert = "") {
    std::ostringstream cmd;
    cmd << "pipeline " << testutil::fixture("biblio.owl") << ' '
        << testutil::fixture("bibtex.owl") << " --wordnet " << testutil::fixture("wordnet")
        << " --cache " << testutil::fixture("hits.tsv") << " --out " << out.string();
    if (!expert.empty()) cmd << " --expert " << expert;
    return cmd.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("pipeline runs are byte-identical") {
    TempDir a("onto_pipe_a"), b("onto_pipe_b");
    REQUIRE(run(pipeline_args(a.path, testutil::fixture("expert_biblio_bibtex.tsv"))) == 0);
    REQUIRE(run(pipeline_args(b.path, testutil::fixture("expert_biblio_bibtex.tsv"))) == 0);
    for (const char* name : {"merged.owl", "correspondences.tsv", "thresholds.txt",
                             "overlay.tsv", "plan.txt", "eval.txt",
                             "resolved_biblio.owl", "resolved_bibtex.owl"})
        CHECK_MESSAGE(read_file(a.path / name) == read_file(b.path / name), name);
}

TEST_CASE("pipeline equals the composition of the individual subcommands") {
    TempDir whole("onto_pipe_whole"), steps("onto_pipe_steps");
    REQUIRE(run(pipeline_args(whole.path)) == 0);

    std::string common = " --wordnet " + testutil::fixture("wordnet");
    REQUIRE(run("merge " + testutil::fixture("biblio.owl") + " " +
                testutil::fixture("bibtex.owl") + common + " --cache " +
                testutil::fixture("hits.tsv") + " --out " + steps.path.string()) == 0);
    REQUIRE(run("enrich " + (steps.path / "merged.owl").string() + common + " --out " +
                steps.path.string()) == 0);

    for (const char* name : {"merged.owl", "correspondences.tsv", "thresholds.txt",
                             "overlay.tsv", "plan.txt", "resolved_biblio.owl",
                             "resolved_bibtex.owl"})
        CHECK_MESSAGE(read_file(whole.path / name) == read_file(steps.path / name), name);

    // The standalone resolve subcommand writes the same bytes as well.
    REQUIRE(run("resolve " + testutil::fixture("biblio.owl") + common + " --out " +
                steps.path.string() + "/solo") == 0);
    CHECK(read_file(steps.path / "solo" / "resolved_biblio.owl") ==
          read_file(whole.path / "resolved_biblio.owl"));
}

TEST_CASE("self-merge scores perfectly against the self expert file") {
    TempDir out("onto_pipe_self");
    std::ostringstream cmd;
    cmd << "pipeline " << testutil::fixture("biblio.owl") << ' '
        << testutil::fixture("biblio.owl") << " --wordnet " << testutil::fixture("wordnet")
        << " --cache " << testutil::fixture("hits.tsv") << " --out " << out.path.string()
        << " --expert " << testutil::fixture("expert_biblio_self.tsv");
    REQUIRE(run(cmd.str()) == 0);
    std::string eval = read_file(out.path / "eval.txt");
    CHECK(eval.find("P=1.000") != std::string::npos);
    CHECK(eval.find("R=1.000") != std::string::npos);
    CHECK(eval.find("incorrect=0") != std::string::npos);
}

TEST_CASE("eval subcommand reproduces the pipeline score from files") {
    TempDir out("onto_pipe_eval");
    REQUIRE(run(pipeline_args(out.path)) == 0);
    std::string cmd = "eval " + (out.path / "correspondences.tsv").string() + " " +
                      testutil::fixture("expert_biblio_bibtex.tsv");
    std::string full = std::string(ONTO_CLI_PATH) + " " + cmd + " > " +
                       (out.path / "eval_out.txt").string() + " 2>/dev/null";
    REQUIRE(std::system(full.c_str()) == 0);
    std::string text = read_file(out.path / "eval_out.txt");
    CHECK(text.find("P=1.000") != std::string::npos);
    CHECK(text.find("R=0.944") != std::string::npos);
}

TEST_CASE("provider failures exit with code 2") {
    TempDir out("onto_pipe_fail");
    // An empty cache cannot answer any query.
    fs::create_directories(out.path);
    std::ofstream(out.path / "cache.tsv") << "";
    std::ostringstream cmd;
    cmd << "pipeline " << testutil::fixture("biblio.owl") << ' '
        << testutil::fixture("bibtex.owl") << " --wordnet " << testutil::fixture("wordnet")
        << " --cache " << (out.path / "cache.tsv").string() << " --out "
        << out.path.string();
    CHECK(run(cmd.str()) == 2);
}

TEST_CASE("validation failures exit with code 1") {
    TempDir out("onto_pipe_bad");
    fs::create_directories(out.path);
    std::ofstream(out.path / "bad.owl")
        << "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\""
        << " xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\""
        << " xmlns:owl=\"http://www.w3.org/2002/07/owl#\">"
        << "<owl:Class rdf:ID=\"A\"><rdfs:subClassOf rdf:resource=\"#B\"/></owl:Class>"
        << "<owl:Class rdf:ID=\"B\"><rdfs:subClassOf rdf:resource=\"#A\"/></owl:Class>"
        << "</rdf:RDF>";
    CHECK(run("check " + (out.path / "bad.owl").string() + " --wordnet " +
              testutil::fixture("wordnet")) == 1);
}

TEST_CASE("check prints the conflict report to stdout") {
    TempDir out("onto_pipe_check");
    fs::create_directories(out.path);
    std::string full = std::string(ONTO_CLI_PATH) + " check " +
                       testutil::fixture("biblio.owl") + " --wordnet " +
                       testutil::fixture("wordnet") + " > " +
                       (out.path / "check.tsv").string();
    REQUIRE(std::system(full.c_str()) == 0);
    CHECK(read_file(out.path / "check.tsv") == "Person\tAgent\t>\tflip\n");
}

TEST_CASE("enriched knowledge base turns unknowns into relations") {
    TempDir out("onto_pipe_enrich");
    REQUIRE(run(pipeline_args(out.path)) == 0);
    auto enriched = wn::KnowledgeBase::load(testutil::fixture("wordnet"),
                                            {(out.path / "overlay.tsv").string()});
    auto senses = enriched.lookup("corporate_body");
    REQUIRE(senses.size() == 1);
    CHECK(senses[0]->targets(wn::PointerKind::Hypernym).size() == 2);
    CHECK(classify("Corporate Body", "Organization", enriched) ==
          Relation::Specialization);
}

TEST_CASE("candidate-limit caps the queries issued per missing concept") {
    TempDir out("onto_pipe_limit");
    REQUIRE(run(pipeline_args(out.path) + " --candidate-limit 5") == 0);
    std::string thresholds = read_file(out.path / "thresholds.txt");
    // Five sorted candidates, none with hits: nothing selected anywhere.
    CHECK(thresholds.find("\"Corporate Body is an Agent\" -> 0") != std::string::npos);
    CHECK(thresholds.find("Organization") == std::string::npos);
}

TEST_CASE("resolve subcommand writes the repaired hierarchy") {
    TempDir out("onto_pipe_resolve");
    REQUIRE(run("resolve " + testutil::fixture("biblio.owl") + " --wordnet " +
                testutil::fixture("wordnet") + " --out " + out.path.string()) == 0);
    std::string owl = read_file(out.path / "resolved_biblio.owl");
    CHECK(owl.find("<owl:Class rdf:ID=\"Agent\">") != std::string::npos);
    CHECK(owl.find("rdf:ID=\"Thing\"") != std::string::npos);
    auto parsed = parse_owl(owl);
    bool flipped = false;
    for (const auto& e : parsed.subclass_edges)
        if (e.first == "Agent" && e.second == "Person") flipped = true;
    CHECK(flipped);
}

TEST_CASE("overlays from one run feed the next: unknowns become relations") {
    TempDir first("onto_pipe_feed1"), second("onto_pipe_feed2");
    REQUIRE(run(pipeline_args(first.path)) == 0);
    std::string before = read_file(first.path / "correspondences.tsv");
    CHECK(before.find("Corporate Body\tOrganization") == std::string::npos);

    // Rerunning with the produced overlay resolves Corporate Body, so the
    // classifier can now commit the relation the statistics suggested.
    std::string args = pipeline_args(second.path) + " --overlay " +
                       (first.path / "overlay.tsv").string();
    REQUIRE(run(args) == 0);
    std::string after = read_file(second.path / "correspondences.tsv");
    CHECK(after.find("Corporate Body\tOrganization\t<") != std::string::npos);
    CHECK(after.find("Organization\tCorporate Body\t>") != std::string::npos);
    // Nothing is missing anymore, so there is nothing to relocate or plan.
    CHECK(read_file(second.path / "thresholds.txt").empty());
    CHECK(read_file(second.path / "plan.txt").empty());
}
