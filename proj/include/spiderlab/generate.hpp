// spiderlab/generate.hpp -- seeded random forest generation for fixtures
// and property tests.

#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "spiderlab/forest.hpp"

namespace spiderlab {

/// Bounds for generate_forest. Leg lengths are drawn from length_menu,
/// spider and leg counts uniformly from the inclusive ranges.
struct GenSpec {
    int spiders_lo = 1;
    int spiders_hi = 3;
    int legs_lo = 3;
    int legs_hi = 6;
    std::vector<int> length_menu = {1, 2, 3, 4, 5};
};

/// Deterministic: the same (seed, spec) pair yields the same forest on any
/// platform. Draws use the raw mt19937_64 stream reduced modulo the range
/// size; std::uniform_int_distribution is avoided because its output is
/// implementation-defined.
inline SpiderForest generate_forest(std::uint64_t seed, const GenSpec& spec = {}) {
    if (spec.spiders_lo < 1 || spec.spiders_hi < spec.spiders_lo)
        throw std::invalid_argument("generate_forest: bad spider count range");
    if (spec.legs_lo < 1 || spec.legs_hi < spec.legs_lo)
        throw std::invalid_argument("generate_forest: bad leg count range");
    if (spec.length_menu.empty())
        throw std::invalid_argument("generate_forest: empty length menu");
    for (int len : spec.length_menu)
        if (len < 1)
            throw std::invalid_argument("generate_forest: leg length must be >= 1");

    std::mt19937_64 rng(seed);
    auto draw = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    int n_spiders = draw(spec.spiders_lo, spec.spiders_hi);
    std::vector<SpiderSpec> spiders;
    spiders.reserve(n_spiders);
    for (int i = 0; i < n_spiders; ++i) {
        int n_legs = draw(spec.legs_lo, spec.legs_hi);
        SpiderSpec sp;
        sp.legs.reserve(n_legs);
        for (int j = 0; j < n_legs; ++j) {
            int idx = draw(0, static_cast<int>(spec.length_menu.size()) - 1);
            sp.legs.push_back(spec.length_menu[idx]);
        }
        spiders.push_back(std::move(sp));
    }
    return SpiderForest(std::move(spiders));
}

}  // namespace spiderlab
