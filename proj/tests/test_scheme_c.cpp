#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "helpers.hpp"
#include "spiderlab/forest.hpp"
#include "spiderlab/generate.hpp"
#include "spiderlab/scheme_c.hpp"
#include "spiderlab/sums.hpp"

using namespace spiderlab;

namespace {

std::vector<Label> leg_labels(const SpiderForest& forest, const Labeling& labeling,
                              int spider1, int leg1) {
    std::vector<Label> out;
    for (int pos = 1; pos <= forest.spider(spider1).legs[leg1 - 1]; ++pos)
        out.push_back(labeling.at(forest, EdgeRef{spider1, leg1, pos}));
    return out;
}

const GenSpec kCorpus{1, 3, 3, 6, {1, 2, 4, 6}};

}  // namespace

TEST_CASE("spider classification and held-back legs", "[scheme_c]") {
    auto forest = parse_forest_text(
        "spider 1 1 1\n"
        "spider 1 1 1 1 1\n"
        "spider 1 4 4 1\n"
        "spider 2 2 4\n");
    auto p = scheme_c::compute_params(forest, 0);
    REQUIRE(p.classes[0] == scheme_c::SpiderClass::Star3);
    REQUIRE(p.classes[1] == scheme_c::SpiderClass::StarBig);
    REQUIRE(p.classes[2] == scheme_c::SpiderClass::MixedPendants);
    REQUIRE(p.classes[3] == scheme_c::SpiderClass::FewPendants);
    REQUIRE(p.t1 == 1);
    REQUIRE(p.t2 == 2);
    REQUIRE(p.t3 == 3);
    REQUIRE(p.block_order == std::vector<int>{0, 1, 2, 3});

    REQUIRE(p.reserved[0] == std::array<int, 2>{-1, -1});
    REQUIRE(p.reserved[1] == std::array<int, 2>{2, 3});   // third and fourth legs
    REQUIRE(p.reserved[2] == std::array<int, 2>{0, 3});   // first two pendant legs
    REQUIRE(p.reserved[3] == std::array<int, 2>{0, 1});   // first two even legs
}

TEST_CASE("three-leg star, exact labels", "[scheme_c]") {
    auto forest = parse_forest_text("spider 1 1 1\n");
    auto labeling = scheme_c::label(forest, 0);
    REQUIRE(labeling.labels == std::vector<Label>{1, 3, 2});
    REQUIRE(check_antimagic(forest, labeling).ok());
}

TEST_CASE("two three-leg stars get consecutive center sums", "[scheme_c]") {
    auto forest = parse_forest_text("spider 1 1 1\nspider 1 1 1\n");
    auto result = scheme_c::label_full(forest, 0);
    REQUIRE(result.prerepair_sums[1] - result.prerepair_sums[0] == 1);
    REQUIRE(result.switches.empty());
    REQUIRE(check_antimagic(forest, result.labeling).ok());
}

TEST_CASE("mixed-pendant spider, exact labels", "[scheme_c]") {
    auto forest = parse_forest_text("spider 1 1 2 2\n");
    auto labeling = scheme_c::label(forest, 0);
    REQUIRE(leg_labels(forest, labeling, 1, 1) == std::vector<Label>{3});
    REQUIRE(leg_labels(forest, labeling, 1, 2) == std::vector<Label>{4});
    REQUIRE(leg_labels(forest, labeling, 1, 3) == std::vector<Label>{1, 5});
    REQUIRE(leg_labels(forest, labeling, 1, 4) == std::vector<Label>{2, 6});
    REQUIRE(check_antimagic(forest, labeling).ok());
}

TEST_CASE("trouble scan finds middle-class sums that hit the tail", "[scheme_c]") {
    std::vector<Label> sums{10, 21, 30, 21, 40};
    REQUIRE(scheme_c::find_trouble(1, 3, sums) == std::vector<int>{1});
    REQUIRE(scheme_c::find_trouble(0, 1, sums).empty());

    std::vector<Label> clean{10, 21, 30, 22, 40};
    REQUIRE(scheme_c::find_trouble(1, 3, clean).empty());
}

TEST_CASE("switch regression: one collision repaired by the final pair",
          "[scheme_c]") {
    auto forest = generate_forest(1, kCorpus);
    REQUIRE(to_text(forest) == "spider 4 4 1 2 1\nspider 1 1 1 6\nspider 6 1 2 2\n");

    auto result = scheme_c::label_full(forest, 1);
    REQUIRE(result.m_prime == 16);
    REQUIRE(result.trouble_initial == std::vector<int>{1});
    REQUIRE(result.prerepair_sums == std::vector<Label>{78, 110, 110});
    REQUIRE(result.final_sums == std::vector<Label>{79, 109, 110});

    REQUIRE(result.switches.size() == 1);
    const auto& sw = result.switches.front();
    REQUIRE(sw.label_a == 18);
    REQUIRE(sw.label_b == 19);
    REQUIRE(sw.spider_a == 2);
    REQUIRE(sw.spider_b == 1);

    REQUIRE(check_antimagic(forest, result.labeling).ok());
}

TEST_CASE("single middle-class spider without a repair partner fails loudly",
          "[scheme_c]") {
    auto forest = parse_forest_text("spider 1 1 2 2\nspider 2 4 4\n");
    for (Label k : {0, 1, 7, 100}) {
        auto labeling = scheme_c::label(forest, k);
        INFO("k=" << k);
        REQUIRE(check_antimagic(forest, labeling).ok());
    }

    try {
        scheme_c::label(forest, 5);
        FAIL("expected a construction failure at k = 5");
    } catch (const scheme_c::ConstructionFailure& e) {
        REQUIRE(e.k == 5);
        REQUIRE(e.forest_text == to_text(forest));
        REQUIRE(std::string(e.what()).find("cannot separate center sums") !=
                std::string::npos);
    }
}

TEST_CASE("pre-repair spacing holds across the corpus", "[scheme_c]") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto forest = generate_forest(seed, kCorpus);
        for (Label k : {0, 1, 7, 100}) {
            auto p = scheme_c::compute_params(forest, k);
            auto result = scheme_c::label_full(forest, k);
            const auto& sums = result.prerepair_sums;
            INFO("seed=" << seed << " k=" << k);
            for (int pos = 1; pos < p.t1; ++pos)
                REQUIRE(sums[pos] - sums[pos - 1] == 1);
            if (p.t1 >= 1 && p.t3 > p.t1)
                REQUIRE(sums[p.t1] - sums[p.t1 - 1] >= 3);
            for (int pos = p.t1 + 1; pos < p.t3; ++pos)
                REQUIRE(sums[pos] - sums[pos - 1] >= 4);
            for (int pos = p.t3 + 1; pos < forest.spider_count(); ++pos)
                REQUIRE(sums[pos] - sums[pos - 1] >= 4);

            auto verdict = check_antimagic(forest, result.labeling);
            INFO(verdict.failure);
            REQUIRE(verdict.ok());
        }
    }
}

TEST_CASE("hypothesis and shift violations are rejected", "[scheme_c]") {
    REQUIRE_THROWS_AS(scheme_c::label(parse_forest_text("spider 1 3 2\n"), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(scheme_c::label(parse_forest_text("spider 1 1\n"), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(scheme_c::label(parse_forest_text("spider 1 1 1\n"), -1),
                      std::invalid_argument);
}
