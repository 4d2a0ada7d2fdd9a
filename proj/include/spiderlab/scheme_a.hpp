// spiderlab/scheme_a.hpp -- constructive k-shifted antimagic labeling for
// spider forests whose legs all have length >= 2, valid for every k >= 0.
//
// Shape of the construction: per spider one leg is reserved (the first
// even-length leg, else the first odd-length one). The remaining legs are
// laid out odd-first and labeled by an alternating low/high walk from four
// ascending label blocks; the reserved legs are completed last by the
// greedy round process, which forces all center sums above everything else
// and pairwise distinct.

#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spiderlab/forest.hpp"
#include "spiderlab/scheme_common.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab::scheme_a {

struct Params {
    Label k = 0;
    int m = 0;
    std::vector<int> reserved_leg;  // per spider, 0-based leg index
    int t_prime = 0;                // spiders whose reserved leg is odd
    /// Non-reserved legs as (spider0, leg0), odd lengths first, input order
    /// within each parity class.
    std::vector<std::pair<int, int>> arranged;
    int n1 = 0;  // odd legs among arranged
    Label a = 0, b = 0, c1 = 0, c2 = 0;
    std::array<LabelBlock, 7> blocks;  // I1..I7, index 0 = I1
};

inline Params compute_params(const SpiderForest& forest, Label k) {
    if (auto report = validate_for_scheme(forest, Scheme::A); !report.ok())
        throw std::invalid_argument("forest outside scheme-a hypothesis:\n" +
                                    report.to_string());
    if (k < 0)
        throw std::invalid_argument("scheme a requires k >= 0");

    Params p;
    p.k = k;
    p.m = forest.edge_count();
    for (const auto& sp : forest.spiders()) {
        int pick = 0;
        for (int j = 0; j < sp.leg_count(); ++j)
            if (sp.legs[j] % 2 == 0) {
                pick = j;
                break;
            }
        p.reserved_leg.push_back(pick);
        int len = sp.legs[pick];
        if (len % 2 == 1) {
            ++p.t_prime;
            p.c1 += (len + 1) / 2;
            p.c2 += (len - 1) / 2;
        } else {
            p.c1 += len / 2;
            p.c2 += len / 2;
        }
    }
    for (int parity : {1, 0}) {
        for (int i = 0; i < forest.spider_count(); ++i) {
            const auto& sp = forest.spiders()[i];
            for (int j = 0; j < sp.leg_count(); ++j) {
                if (j == p.reserved_leg[i] || sp.legs[j] % 2 != parity)
                    continue;
                p.arranged.emplace_back(i, j);
                if (parity == 1) {
                    ++p.n1;
                    p.a += (sp.legs[j] - 1) / 2;
                } else {
                    p.b += sp.legs[j] / 2;
                }
            }
        }
    }
    if (2 * p.a + 2 * p.b + p.c1 + p.c2 + p.n1 != p.m)
        throw std::logic_error("scheme a parameter identity violated");

    const Label A = p.a, B = p.b, C1 = p.c1, C2 = p.c2;
    p.blocks[0] = {k + 1, k + A};
    p.blocks[1] = {k + A + 1, k + A + B};
    p.blocks[2] = {k + A + B + 1, k + A + B + C1};
    p.blocks[3] = {k + A + B + C1 + 1, k + 2 * A + B + C1};
    p.blocks[4] = {k + 2 * A + B + C1 + 1, k + 2 * A + 2 * B + C1};
    p.blocks[5] = {k + 2 * A + 2 * B + C1 + 1, k + 2 * A + 2 * B + C1 + C2};
    p.blocks[6] = {k + 2 * A + 2 * B + C1 + C2 + 1, k + p.m};
    return p;
}

struct Trace {
    std::vector<ReservedRound> rounds;
};

inline std::pair<Labeling, Trace> label_with_trace(const SpiderForest& forest, Label k) {
    Params p = compute_params(forest, k);
    LabelWriter writer(forest);
    AscendingCursor low_odd(p.blocks[0]);   // I1
    AscendingCursor low_even(p.blocks[1]);  // I2
    AscendingCursor high_odd(p.blocks[3]);  // I4
    AscendingCursor high_even(p.blocks[4]); // I5

    int odd_index = 0;
    for (auto [i, j] : p.arranged) {
        int len = forest.spiders()[i].legs[j];
        if (len % 2 == 1) {
            label_alternating(writer, i, j, len - 1, low_odd, high_odd);
            ++odd_index;
            writer.assign(i, j, len, k + p.m - p.n1 + odd_index);
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
                                            p.blocks[2], p.blocks[5]);  // I3, I6
    return {writer.finish(k), std::move(trace)};
}

inline Labeling label(const SpiderForest& forest, Label k) {
    return label_with_trace(forest, k).first;
}

}  // namespace spiderlab::scheme_a
