#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "helpers.hpp"
#include "spiderlab/forest.hpp"
#include "spiderlab/generate.hpp"
#include "spiderlab/scheme_a.hpp"
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

}  // namespace

TEST_CASE("all-even spider, exact labels", "[scheme_a]") {
    auto forest = parse_forest_text("spider 2 2 2\n");
    auto p = scheme_a::compute_params(forest, 0);
    REQUIRE(p.reserved_leg == std::vector<int>{0});
    REQUIRE(p.a == 0);
    REQUIRE(p.b == 2);
    REQUIRE(p.c1 == 1);
    REQUIRE(p.c2 == 1);
    REQUIRE(p.n1 == 0);
    REQUIRE(p.t_prime == 0);

    auto labeling = scheme_a::label(forest, 0);
    REQUIRE(leg_labels(forest, labeling, 1, 1) == std::vector<Label>{3, 6});
    REQUIRE(leg_labels(forest, labeling, 1, 2) == std::vector<Label>{1, 4});
    REQUIRE(leg_labels(forest, labeling, 1, 3) == std::vector<Label>{2, 5});
    REQUIRE(check_antimagic(forest, labeling).ok());
}

TEST_CASE("all-odd spider, exact labels", "[scheme_a]") {
    auto forest = parse_forest_text("spider 3 3 3\n");
    auto p = scheme_a::compute_params(forest, 0);
    REQUIRE(p.reserved_leg == std::vector<int>{0});
    REQUIRE(p.t_prime == 1);
    REQUIRE(p.a == 2);
    REQUIRE(p.b == 0);
    REQUIRE(p.c1 == 2);
    REQUIRE(p.c2 == 1);
    REQUIRE(p.n1 == 2);

    auto labeling = scheme_a::label(forest, 0);
    REQUIRE(leg_labels(forest, labeling, 1, 1) == std::vector<Label>{3, 7, 4});
    REQUIRE(leg_labels(forest, labeling, 1, 2) == std::vector<Label>{1, 5, 8});
    REQUIRE(leg_labels(forest, labeling, 1, 3) == std::vector<Label>{2, 6, 9});
    REQUIRE(check_antimagic(forest, labeling).ok());
}

TEST_CASE("59-edge forest parameters and intervals", "[scheme_a]") {
    auto forest = parse_forest_text(read_file(fixture_path("forest_59.txt")));
    auto p = scheme_a::compute_params(forest, 0);
    REQUIRE(p.m == 59);
    REQUIRE(p.a == 11);
    REQUIRE(p.b == 7);
    REQUIRE(p.c1 == 8);
    REQUIRE(p.c2 == 7);
    REQUIRE(p.n1 == 8);
    REQUIRE(p.t_prime == 1);

    const Label expected[7][2] = {{1, 11},  {12, 18}, {19, 26}, {27, 37},
                                  {38, 44}, {45, 51}, {52, 59}};
    for (int i = 0; i < 7; ++i) {
        REQUIRE(p.blocks[i].lo == expected[i][0]);
        REQUIRE(p.blocks[i].hi == expected[i][1]);
    }

    // The construction emits a different valid labeling than the fixture
    // document (leg arrangement inside a parity class is input-order here).
    auto labeling = scheme_a::label(forest, 0);
    REQUIRE(check_antimagic(forest, labeling).ok());
    REQUIRE(structural_ordering_check(forest, labeling).ok);
}

TEST_CASE("parameters shift uniformly with k", "[scheme_a]") {
    auto forest = parse_forest_text("spider 3 2 4\nspider 2 2 5\n");
    auto base = scheme_a::compute_params(forest, 0);
    auto shifted = scheme_a::compute_params(forest, 100);
    REQUIRE(base.a == shifted.a);
    REQUIRE(base.n1 == shifted.n1);
    for (int i = 0; i < 7; ++i) {
        REQUIRE(shifted.blocks[i].lo == base.blocks[i].lo + 100);
        REQUIRE(shifted.blocks[i].hi == base.blocks[i].hi + 100);
    }
}

TEST_CASE("reserved rounds have strictly decreasing center sums", "[scheme_a]") {
    auto forest = generate_forest(23, GenSpec{3, 4, 3, 5, {2, 3, 4, 5}});
    auto [labeling, trace] = scheme_a::label_with_trace(forest, 2);
    REQUIRE(trace.rounds.size() == static_cast<std::size_t>(forest.spider_count()));
    for (std::size_t i = 1; i < trace.rounds.size(); ++i)
        REQUIRE(trace.rounds[i].center_sum < trace.rounds[i - 1].center_sum);
    REQUIRE(check_antimagic(forest, labeling).ok());
}

TEST_CASE("property sweep with ordering and degree-2 bound", "[scheme_a]") {
    GenSpec spec{1, 4, 3, 5, {2, 3, 4, 5}};
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto forest = generate_forest(seed, spec);
        for (Label k : {0, 1, 7, 100}) {
            auto p = scheme_a::compute_params(forest, k);
            auto labeling = scheme_a::label(forest, k);
            auto verdict = check_antimagic(forest, labeling);
            INFO("seed=" << seed << " k=" << k << " " << verdict.failure);
            REQUIRE(verdict.ok());

            auto ordering = structural_ordering_check(forest, labeling);
            REQUIRE(ordering.ok);
            REQUIRE(ordering.has_internal);
            REQUIRE(ordering.max_internal <= (k + 2 * p.a + p.b + p.c1) + (k + p.m));
        }
    }
}

TEST_CASE("hypothesis and shift violations are rejected", "[scheme_a]") {
    auto pendant = parse_forest_text("spider 1 2 2\n");
    REQUIRE_THROWS_AS(scheme_a::label(pendant, 0), std::invalid_argument);

    auto degenerate = parse_forest_text("spider 2 2\n");
    REQUIRE_THROWS_AS(scheme_a::label(degenerate, 0), std::invalid_argument);

    auto fine = parse_forest_text("spider 2 2 2\n");
    REQUIRE_THROWS_AS(scheme_a::label(fine, -1), std::invalid_argument);
}
