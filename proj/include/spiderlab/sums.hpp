// spiderlab/sums.hpp -- edge labelings, vertex sums, and the antimagic
// verdict (bijection onto a shifted integer interval with pairwise
// distinct vertex sums).

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spiderlab/forest.hpp"

namespace spiderlab {

using Label = long long;

/// Sentinel for edges not yet assigned by a partially built labeling.
inline constexpr Label kUnassigned = std::numeric_limits<Label>::min();

/// An assignment of integer labels to the edges of some forest, stored in
/// canonical edge order. A labeling with shift k is expected to use each
/// value of [k+1, k+m] exactly once; whether it actually does is checked
/// by check_antimagic, not enforced here.
struct Labeling {
    Label k = 0;
    std::vector<Label> labels;

    int edge_count() const { return static_cast<int>(labels.size()); }

    Label at(const SpiderForest& forest, const EdgeRef& e) const {
        return labels.at(forest.edge_index(e));
    }
};

inline void require_match(const SpiderForest& forest, const Labeling& labeling) {
    if (labeling.edge_count() != forest.edge_count())
        throw std::invalid_argument(
            "labeling has " + std::to_string(labeling.edge_count()) +
            " labels but forest has " + std::to_string(forest.edge_count()) + " edges");
}

struct VertexSumReport {
    std::vector<Label> sums;  // by canonical vertex id
    std::vector<std::pair<VertexRef, VertexRef>> collisions;

    bool distinct() const { return collisions.empty(); }
};

/// Sum of incident labels at every vertex, plus the complete list of
/// colliding pairs (every pair of vertices sharing a sum, not just the
/// first one found).
inline VertexSumReport vertex_sums(const SpiderForest& forest, const Labeling& labeling) {
    require_match(forest, labeling);
    VertexSumReport report;
    report.sums.assign(forest.vertex_count(), 0);
    for (int id = 0; id < forest.edge_count(); ++id) {
        auto [u, w] = forest.edge_endpoints(forest.edge_at(id));
        report.sums[forest.vertex_index(u)] += labeling.labels[id];
        report.sums[forest.vertex_index(w)] += labeling.labels[id];
    }
    std::vector<int> order(report.sums.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return report.sums[x] != report.sums[y]
                                             ? report.sums[x] < report.sums[y]
                                             : x < y; });
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && report.sums[order[j]] == report.sums[order[i]])
            ++j;
        for (std::size_t x = i; x < j; ++x)
            for (std::size_t y = x + 1; y < j; ++y)
                report.collisions.emplace_back(forest.vertex_at(order[x]),
                                               forest.vertex_at(order[y]));
        i = j;
    }
    return report;
}

struct AntimagicVerdict {
    bool range_ok = false;      // label set is exactly [k+1, k+m]
    bool bijection_ok = false;  // labels pairwise distinct
    bool sums_distinct = false;
    std::string failure;        // human-readable description of the first failure

    bool ok() const { return range_ok && bijection_ok && sums_distinct; }
};

/// Full verdict: bijectivity, exact label range, and distinct vertex sums.
/// The first failing condition is described in `failure` with a witness.
inline AntimagicVerdict check_antimagic(const SpiderForest& forest, const Labeling& labeling) {
    require_match(forest, labeling);
    AntimagicVerdict verdict;
    const int m = forest.edge_count();

    std::vector<Label> sorted = labeling.labels;
    std::sort(sorted.begin(), sorted.end());
    verdict.bijection_ok =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    verdict.range_ok = verdict.bijection_ok && !sorted.empty() &&
                       sorted.front() == labeling.k + 1 && sorted.back() == labeling.k + m;

    auto report = vertex_sums(forest, labeling);
    verdict.sums_distinct = report.distinct();

    std::ostringstream why;
    if (!verdict.bijection_ok) {
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        why << "label " << *dup << " used more than once";
    } else if (!verdict.range_ok) {
        why << "labels span [" << sorted.front() << ", " << sorted.back()
            << "], expected [" << labeling.k + 1 << ", " << labeling.k + m << "]";
    } else if (!verdict.sums_distinct) {
        const auto& [u, w] = report.collisions.front();
        why << "vertex sum " << report.sums[forest.vertex_index(u)] << " shared by "
            << u.to_string() << " and " << w.to_string() << " ("
            << report.collisions.size() << " colliding pair"
            << (report.collisions.size() == 1 ? "" : "s") << " total)";
    }
    verdict.failure = why.str();
    return verdict;
}

struct OrderingCheck {
    bool ok = false;
    // Extremes per degree class; meaningful only when the class is nonempty.
    Label max_leaf = 0;
    Label min_internal = 0;
    Label max_internal = 0;
    Label min_center = 0;
    bool has_leaf = false;
    bool has_internal = false;
    bool has_center = false;
};

///// Layered-sum check used by the construction tests: every leaf sum below
/// every degree-2 sum below every center sum. Vertices are classified by
/// degree (center = degree >= 3), so the check is only meaningful for
/// forests whose spiders have at least three legs.
inline OrderingCheck structural_ordering_check(const SpiderForest& forest,
                                               const Labeling& labeling) {
    auto report = vertex_sums(forest, labeling);
    OrderingCheck check;
    for (int id = 0; id < forest.vertex_count(); ++id) {
        int deg = forest.degree(forest.vertex_at(id));
        Label s = report.sums[id];
        if (deg == 1) {
            check.max_leaf = check.has_leaf ? std::max(check.max_leaf, s) : s;
            check.has_leaf = true;
        } else if (deg == 2) {
            check.min_internal = check.has_internal ? std::min(check.min_internal, s) : s;
            check.max_internal = check.has_internal ? std::max(check.max_internal, s) : s;
            check.has_internal = true;
        } else {
            check.min_center = check.has_center ? std::min(check.min_center, s) : s;
            check.has_center = true;
        }
    }
    check.ok = true;
    if (check.has_leaf && check.has_internal && check.max_leaf >= check.min_internal)
        check.ok = false;
    if (check.has_internal && check.has_center && check.max_internal >= check.min_center)
        check.ok = false;
    if (check.has_leaf && check.has_center && check.max_leaf >= check.min_center)
        check.ok = false;
    return check;
}

}  // namespace spiderlab
