#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include "spiderlab/forest.hpp"
#include "spiderlab/io.hpp"
#include "spiderlab/scheme_b.hpp"
#include "spiderlab/sums.hpp"

using namespace spiderlab;

TEST_CASE("forest json round trip", "[io]") {
    auto forest = parse_forest_text("spider 2 3 4\nspider 1 1 1\n");
    auto doc = forest_to_json(forest);
    REQUIRE(doc["spiders"].size() == 2);
    REQUIRE(forest_from_json(doc) == forest);

    auto reparsed = forest_from_json(nlohmann::json::parse(doc.dump()));
    REQUIRE(reparsed == forest);
}

TEST_CASE("forest json rejects malformed documents", "[io]") {
    REQUIRE_THROWS_AS(forest_from_json(nlohmann::json::array()), ParseError);
    REQUIRE_THROWS_AS(forest_from_json(nlohmann::json{{"spiders", 3}}), ParseError);
    REQUIRE_THROWS_AS(forest_from_json(nlohmann::json::parse(R"({"spiders":[[]]})")),
                      ParseError);
    REQUIRE_THROWS_AS(forest_from_json(nlohmann::json::parse(R"({"spiders":[[0,2]]})")),
                      ParseError);
    REQUIRE_THROWS_AS(forest_from_json(nlohmann::json::parse(R"({"spiders":[[1.5]]})")),
                      ParseError);
}

TEST_CASE("labeling json round trip, including negative shifts", "[io]") {
    auto forest = parse_forest_text("spider 1 2 2\n");
    Labeling labeling{1, {4, 2, 5, 3, 6}};
    auto doc = labeling_to_json(forest, labeling);
    auto back = labeling_from_json(forest, doc);
    REQUIRE(back.k == labeling.k);
    REQUIRE(back.labels == labeling.labels);

    auto mirrored = scheme_b::mirror_negate(labeling);
    auto mdoc = labeling_to_json(forest, mirrored);
    auto mback = labeling_from_json(forest, mdoc);
    REQUIRE(mback.k == -1 - 5 - 1);
    REQUIRE(mback.labels == std::vector<Label>{-4, -2, -5, -3, -6});
}

TEST_CASE("labeling json names missing, repeated, and unknown edges", "[io]") {
    auto forest = parse_forest_text("spider 2\n");
    auto doc = labeling_to_json(forest, Labeling{0, {1, 2}});

    auto missing = doc;
    missing["edges"].erase(1);
    REQUIRE_THROWS_WITH(labeling_from_json(forest, missing),
                        Catch::Matchers::ContainsSubstring("missing"));

    auto repeated = doc;
    repeated["edges"][1] = repeated["edges"][0];
    REQUIRE_THROWS_WITH(labeling_from_json(forest, repeated),
                        Catch::Matchers::ContainsSubstring("twice"));

    auto unknown = doc;
    unknown["edges"][1]["pos"] = 9;
    REQUIRE_THROWS_WITH(labeling_from_json(forest, unknown),
                        Catch::Matchers::ContainsSubstring("does not exist"));

    auto no_k = doc;
    no_k.erase("k");
    REQUIRE_THROWS_AS(labeling_from_json(forest, no_k), ParseError);

    auto bad_label = doc;
    bad_label["edges"][0]["label"] = "seven";
    REQUIRE_THROWS_AS(labeling_from_json(forest, bad_label), ParseError);
}

TEST_CASE("repair log survives the json round trip", "[io]") {
    auto forest = parse_forest_text("spider 1 1 1\n");
    Labeling labeling{0, {1, 2, 3}};
    scheme_c::SwitchLog log{{18, 19, 2, 1}};
    auto doc = labeling_to_json(forest, labeling, &log);
    REQUIRE(doc.contains("repairs"));
    REQUIRE(doc["repairs"].size() == 1);
    REQUIRE(doc["repairs"][0]["label_a"] == 18);

    auto back = repairs_from_json(doc);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].label_a == 18);
    REQUIRE(back[0].label_b == 19);
    REQUIRE(back[0].spider_a == 2);
    REQUIRE(back[0].spider_b == 1);

    auto bare = labeling_to_json(forest, labeling);
    REQUIRE_FALSE(bare.contains("repairs"));
    REQUIRE(repairs_from_json(bare).empty());
}

TEST_CASE("dot export lists every vertex and edge", "[io]") {
    auto forest = parse_forest_text("spider 1 1 1\n");
    Labeling labeling{0, {1, 2, 3}};
    std::string dot = to_dot(forest, labeling);
    REQUIRE(dot.find("graph spider_forest {") != std::string::npos);
    REQUIRE(dot.find("c1 [xlabel=\"6\"]") != std::string::npos);
    REQUIRE(dot.find("v1_1_1 -- c1 [label=\"1\"]") != std::string::npos);

    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -- "); at != std::string::npos;
         at = dot.find(" -- ", at + 1))
        ++edges;
    REQUIRE(edges == 3);
}
