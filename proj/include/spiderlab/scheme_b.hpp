// spiderlab/scheme_b.hpp -- constructive k-shifted antimagic labeling for
// arbitrary spider forests (legs of length 1 allowed), valid for every
// k >= k0 where k0 is computed from the forest. Negating every label in
// the output yields a second labeling at shift -(k + m + 1), so large
// negative shifts come for free.
//
// Spiders are grouped by r_i, their number of legs of length >= 2. Spiders
// with r_i <= 2 reserve a pendant leg; stars and near-stars additionally
// donate one or two pendant legs to a "collected" pool whose labels are
// paired symmetrically so that the reserved-leg completion can still
// separate the center sums. Everything else follows the alternating-walk
// pattern, with pendant legs absorbed into the odd-leg machinery.

#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spiderlab/forest.hpp"
#include "spiderlab/scheme_common.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab::scheme_b {

struct Params {
    Label k = 0;
    int m = 0;
    std::vector<int> s_i;  // pendant legs per spider
    std::vector<int> r_i;  // legs of length >= 2 per spider
    int alpha = 0;         // spiders with r_i == 0
    int beta = 0;          // spiders with r_i == 1
    int gamma = 0;         // spiders with r_i == 2
    int s = 0;             // total pendant legs
    int q = 0;             // pendant legs left after reserving and collecting
    std::vector<int> reserved_leg;  // per spider, 0-based
    int t_prime = 0;                // spiders with odd reserved leg
    /// All non-reserved legs in labeling order: the collected pendant pool
    /// (alpha pairs split across positions i and alpha+i, then beta
    /// singles), the q remaining pendant legs, odd legs of length >= 3,
    /// then even legs; input order within each class.
    std::vector<std::pair<int, int>> arranged;
    int collected_count = 0;  // 2*alpha + beta, a prefix of `arranged`
    int n1 = 0;               // odd legs among `arranged`, pendant legs included
    Label a = 0, b = 0, c1 = 0, c2 = 0;
    Label k0 = 0;
    std::array<LabelBlock, 9> blocks;  // I1..I9, index 0 = I1
};

namespace detail {

inline Params arrange(const SpiderForest& forest) {
    if (auto report = validate_for_scheme(forest, Scheme::B); !report.ok())
        throw std::invalid_argument("forest outside scheme-b hypothesis:\n" +
                                    report.to_string());
    Params p;
    p.m = forest.edge_count();
    const int t = forest.spider_count();
    for (const auto& sp : forest.spiders()) {
        p.s_i.push_back(sp.one_leg_count());
        p.r_i.push_back(sp.long_leg_count());
        p.s += sp.one_leg_count();
    }
    for (int i = 0; i < t; ++i) {
        if (p.r_i[i] == 0) ++p.alpha;
        if (p.r_i[i] == 1) ++p.beta;
        if (p.r_i[i] == 2) ++p.gamma;
    }
    p.q = p.s - (3 * p.alpha + 2 * p.beta + p.gamma);

    for (int i = 0; i < t; ++i) {
        const auto& legs = forest.spiders()[i].legs;
        int pick = -1;
        if (p.r_i[i] <= 2) {
            for (int j = 0; j < static_cast<int>(legs.size()); ++j)
                if (legs[j] == 1) {
                    pick = j;
                    break;
                }
        } else {
            for (int j = 0; j < static_cast<int>(legs.size()); ++j)
                if (legs[j] % 2 == 0) {
                    pick = j;
                    break;
                }
            if (pick < 0)
                for (int j = 0; j < static_cast<int>(legs.size()); ++j)
                    if (legs[j] >= 3) {  // odd here; a pendant leg cannot stand in
                        pick = j;
                        break;
                    }
        }
        if (pick < 0)
            throw std::logic_error("scheme b reserved-leg selection failed");
        p.reserved_leg.push_back(pick);
        int len = legs[pick];
        if (len % 2 == 1) {
            ++p.t_prime;
            p.c1 += (len + 1) / 2;
            p.c2 += (len - 1) / 2;
        } else {
            p.c1 += len / 2;
            p.c2 += len / 2;
        }
    }

    // Collected pendant pool: two legs per star, one per beta spider. The
    // two legs of star number i sit at positions i and alpha+i so that the
    // symmetric pair labels land on the same center.
    std::vector<std::pair<int, int>> first_of_pair, second_of_pair, singles;
    for (int i = 0; i < t; ++i) {
        if (p.r_i[i] > 1)
            continue;
        const auto& legs = forest.spiders()[i].legs;
        std::vector<int> pendants;
        for (int j = 0; j < static_cast<int>(legs.size()); ++j)
            if (legs[j] == 1 && j != p.reserved_leg[i])
                pendants.push_back(j);
        if (p.r_i[i] == 0) {
            first_of_pair.emplace_back(i, pendants.at(0));
            second_of_pair.emplace_back(i, pendants.at(1));
        } else {
            singles.emplace_back(i, pendants.at(0));
        }
    }
    for (auto& leg : first_of_pair) p.arranged.push_back(leg);
    for (auto& leg : second_of_pair) p.arranged.push_back(leg);
    for (auto& leg : singles) p.arranged.push_back(leg);
    p.collected_count = static_cast<int>(p.arranged.size());

    auto is_collected = [&](int i, int j) {
        for (int x = 0; x < p.collected_count; ++x)
            if (p.arranged[x] == std::pair{i, j})
                return true;
        return false;
    };
    auto append_class = [&](auto&& want) {
        for (int i = 0; i < t; ++i) {
            const auto& legs = forest.spiders()[i].legs;
            for (int j = 0; j < static_cast<int>(legs.size()); ++j) {
                if (j == p.reserved_leg[i] || is_collected(i, j))
                    continue;
                if (want(legs[j]))
                    p.arranged.emplace_back(i, j);
            }
        }
    };
    append_class([](int len) { return len == 1; });
    append_class([](int len) { return len % 2 == 1 && len >= 3; });
    append_class([](int len) { return len % 2 == 0; });

    for (auto [i, j] : p.arranged) {
        int len = forest.spiders()[i].legs[j];
        if (len % 2 == 1) {
            ++p.n1;
            p.a += (len - 1) / 2;
        } else {
            p.b += len / 2;
        }
    }
    if (2 * p.a + 2 * p.b + p.c1 + p.c2 + p.n1 != p.m)
        throw std::logic_error("scheme b parameter identity violated");
    if (p.n1 < p.q + p.collected_count)
        throw std::logic_error("scheme b pendant-leg accounting violated");

    p.k0 = std::max<Label>(1, p.n1 + p.a + p.c2 - 2 * static_cast<Label>(p.q));
    return p;
}

}  // namespace detail

inline Label compute_k0(const SpiderForest& forest) {
    return detail::arrange(forest).k0;
}

inline Params compute_params(const SpiderForest& forest, Label k) {
    Params p = detail::arrange(forest);
    if (k < p.k0)
        throw std::invalid_argument("scheme b requires k >= " + std::to_string(p.k0) +
                                    " for this forest, got " + std::to_string(k));
    p.k = k;
    const Label A = p.a, B = p.b, Q = p.q, C1 = p.c1, C2 = p.c2;
    const Label pairs = p.collected_count;
    Label lo = k;
    auto next_block = [&lo](Label size) {
        LabelBlock block{lo + 1, lo + size};
        lo += size;
        return block;
    };
    p.blocks[0] = next_block(A);
    p.blocks[1] = next_block(B);
    p.blocks[2] = next_block(Q);
    p.blocks[3] = next_block(C1);
    p.blocks[4] = next_block(pairs);
    p.blocks[5] = next_block(A);
    p.blocks[6] = next_block(B);
    p.blocks[7] = next_block(C2);
    p.blocks[8] = next_block(p.n1 - Q - pairs);
    if (lo != k + p.m)
        throw std::logic_error("scheme b blocks do not partition the label range");
    return p;
}

struct Trace {
    std::vector<ReservedRound> rounds;
};

inline std::pair<Labeling, Trace> label_with_trace(const SpiderForest& forest, Label k) {
    Params p = compute_params(forest, k);
    LabelWriter writer(forest);
    AscendingCursor low_odd(p.blocks[0]);    // I1
    AscendingCursor low_even(p.blocks[1]);   // I2
    AscendingCursor pendant_pool(p.blocks[2]);  // I3
    AscendingCursor high_odd(p.blocks[5]);   // I6
    AscendingCursor high_even(p.blocks[6]);  // I7

    const LabelBlock& pair_block = p.blocks[4];  // I5
    for (int idx = 0; idx < static_cast<int>(p.arranged.size()); ++idx) {
        auto [i, j] = p.arranged[idx];
        int len = forest.spiders()[i].legs[j];
        int pos1 = idx + 1;  // 1-based position in the arrangement
        if (idx < p.collected_count) {
            Label value;
            if (pos1 <= p.alpha)
                value = pair_block.lo - 1 + pos1;
            else if (pos1 <= 2 * p.alpha)
                value = pair_block.hi + 1 - (pos1 - p.alpha);
            else
                value = pair_block.lo - 1 + pos1 - p.alpha;
            writer.assign(i, j, 1, value);
        } else if (len == 1) {
            writer.assign(i, j, 1, pendant_pool.take());
        } else if (len % 2 == 1) {
            label_alternating(writer, i, j, len - 1, low_odd, high_odd);
            writer.assign(i, j, len, k + p.m - p.n1 + pos1);
        } else {
            label_alternating(writer, i, j, len, low_even, high_even);
        }
    }

    std::vector<ReservedLeg> reserved;
    std::vector<Label> center_partial(forest.spider_count(), 0);
    for (int i = 0; i < forest.spider_count(); ++i) {
        const auto& sp = forest.spiders()[i];
        int j = p.reserved_leg[i];
        reserved.push_back({i, j, sp.legs[j], sp.legs[j] % 2 == 1});
        for (int leg = 0; leg < sp.leg_count(); ++leg)
            if (leg != j)
                center_partial[i] += writer.at(i, leg, sp.legs[leg]);
    }
    Trace trace;
    trace.rounds = run_reserved_leg_process(writer, reserved, std::move(center_partial),
                                            p.blocks[3], p.blocks[7]);  // I4, I8
    return {writer.finish(k), std::move(trace)};
}

inline Labeling label(const SpiderForest& forest, Label k) {
    return label_with_trace(forest, k).first;
}

/// Negation of a valid labeling is again a bijection onto an integer
/// interval, at shift -(k + m + 1), and vertex sums stay pairwise distinct.
inline Labeling mirror_negate(const Labeling& input) {
    Labeling out;
    out.k = -input.k - input.edge_count() - 1;
    out.labels.reserve(input.labels.size());
    for (Label x : input.labels)
        out.labels.push_back(-x);
    return out;
}

}  // namespace spiderlab::scheme_b
