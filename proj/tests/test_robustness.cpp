#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "helpers.hpp"
#include "onto/owl.hpp"
#include "onto/relations.hpp"

using namespace onto;

namespace {

std::string biblio_text() {
    std::ifstream in(testutil::fixture("biblio.owl"));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Either a valid ontology or an onto::Error; nothing else may escape.
bool parses_or_rejects(const std::string& text) {
    try {
        parse_owl(text);
        return true;
    } catch (const Error&) {
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace

TEST_CASE("hand-picked malformed documents are rejected cleanly") {
    const char* cases[] = {
        "",
        "<",
        "<>",
        "<a",
        "<a b></a>",
        "<a b=></a>",
        "<a><b></a></b>",
        "<a>&bogus;</a>",
        "<a>&#xZZ;</a>",
        "<a><![CDATA[unterminated</a>",
        "<!-- only a comment -->",
        "<a/><b/>",
        "<a attr='x' attr2=\"un terminated></a>",
        "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">"
        "<rdf:RDF",
    };
    for (const char* text : cases) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_owl(text), Error);
    }
}

TEST_CASE("random mutations of a valid document never escape the error contract") {
    std::string base = biblio_text();
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<std::size_t> pos_dist(0, base.size() - 1);
    std::uniform_int_distribution<int> char_dist(0, 127);

    for (int round = 0; round < 300; ++round) {
        std::string text = base;
        switch (round % 3) {
            case 0:  // truncate
                text.resize(pos_dist(rng));
                break;
            case 1:  // flip one character
                text[pos_dist(rng)] = static_cast<char>(char_dist(rng));
                break;
            case 2:  // delete a span
            {
                auto at = pos_dist(rng);
                text.erase(at, std::min<std::size_t>(17, text.size() - at));
                break;
            }
        }
        CAPTURE(round);
        CHECK(parses_or_rejects(text));
    }
}

TEST_CASE("mutated database files never escape the load error contract") {
    namespace fs = std::filesystem;
    std::string data;
    {
        std::ifstream in(testutil::fixture("wordnet") + "/data.noun");
        std::stringstream buf;
        buf << in.rdbuf();
        data = buf.str();
    }
    std::string index;
    {
        std::ifstream in(testutil::fixture("wordnet") + "/index.noun");
        std::stringstream buf;
        buf << in.rdbuf();
        index = buf.str();
    }

    std::mt19937 rng(1003);
    std::uniform_int_distribution<std::size_t> dpos(0, data.size() - 1);
    std::uniform_int_distribution<std::size_t> ipos(0, index.size() - 1);
    fs::path dir = fs::temp_directory_path() / "onto_mutated_wn";

    for (int round = 0; round < 60; ++round) {
        std::string d = data;
        std::string i = index;
        if (round % 2 == 0) d.resize(dpos(rng));
        else i.resize(ipos(rng));
        fs::create_directories(dir);
        std::ofstream(dir / "data.noun") << d;
        std::ofstream(dir / "index.noun") << i;
        try {
            auto kb = wn::KnowledgeBase::load(dir.string());
            CHECK_FALSE(kb.synsets().empty());
        } catch (const Error&) {
            CHECK(true);
        }
        fs::remove_all(dir);
    }
}

TEST_CASE("the knowledge base serves concurrent readers") {
    const auto& kb = testutil::kb();
    const auto& vocab = testutil::fixture_vocabulary();
    std::vector<std::thread> workers;
    std::vector<int> mismatches(8, 0);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = 0; i < vocab.size(); ++i) {
                const auto& a = vocab[(i + t) % vocab.size()];
                const auto& b = vocab[(i * 7 + t * 3) % vocab.size()];
                auto la = display_label(a);
                auto lb = display_label(b);
                if (classify(la, lb, kb) != dual(classify(lb, la, kb))) ++mismatches[t];
            }
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) CHECK(mismatches[t] == 0);
}
