#include <doctest.h>

#include "onto/text.hpp"

using namespace onto;

TEST_CASE("porter stemmer on known forms") {
    // The load-bearing property: plural and singular collide.
    CHECK(porter_stem("universities") == porter_stem("university"));
    CHECK(porter_stem("universities") == "univers");
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("agreed") == "agre");
    CHECK(porter_stem("plastered") == "plaster");
    CHECK(porter_stem("motoring") == "motor");
    CHECK(porter_stem("conflated") == "conflat");
    CHECK(porter_stem("hopping") == "hop");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("organization") == "organ");
    CHECK(porter_stem("book") == "book");
}

TEST_CASE("preprocess_label lowers, strips stop words and joins") {
    CHECK(preprocess_label("Corporate Body") == "corporate_body");
    CHECK(preprocess_label("The Publisher") == "publisher");
    CHECK(preprocess_label("Corporate_Body") == "corporate_body");
    CHECK(preprocess_label("Reference Book") == "reference_book");
    CHECK(preprocess_label("organization") == "organization");
}

TEST_CASE("preprocess_label fails on labels made of stop words") {
    CHECK_THROWS_AS(preprocess_label("The"), PreprocessError);
    CHECK_THROWS_AS(preprocess_label("of the"), PreprocessError);
    CHECK_THROWS_AS(preprocess_label(""), PreprocessError);
}

TEST_CASE("stem_key stems per token") {
    CHECK(stem_key("universities") == "univers");
    CHECK(stem_key("corporate_bodies") == "corpor_bodi");
}
