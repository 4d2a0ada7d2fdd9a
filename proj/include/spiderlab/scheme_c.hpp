// spiderlab/scheme_c.hpp -- constructive k-shifted antimagic labeling for
// spider forests whose legs are all pendant or of even length, valid for
// every k >= 0. This is the only scheme that covers stars at k = 0.
//
// Spiders are classified into four blocks: three-leg stars, larger stars,
// non-stars with at least two pendant legs, and spiders with at most one
// pendant leg. Stars take symmetric label pairs from the middle block;
// even legs take an alternating low/high walk; each spider of the two
// middle classes holds back two pendant legs that later receive a
// consecutive "special" pair, placed after re-sorting by partial center
// sum. A final scan repairs center-sum collisions between the middle
// classes and the last block by swapping adjacent special labels; every
// swap is recorded so callers can audit the repair.

#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spiderlab/forest.hpp"
#include "spiderlab/scheme_common.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab::scheme_c {

enum class SpiderClass {
    Star3,          // star with exactly three legs
    StarBig,        // star with four or more legs
    MixedPendants,  // non-star with at least two pendant legs
    FewPendants,    // at most one pendant leg
};

struct Params {
    Label k = 0;
    int m = 0;
    int s = 0;  // pendant legs in the whole forest
    std::vector<SpiderClass> classes;  // by input spider, 0-based
    /// Input spider indices (0-based) grouped by class, input order within
    /// each class: [0, t1) three-leg stars, [t1, t2) all stars, [t2, t3)
    /// mixed-pendant spiders, [t3, t) the rest.
    std::vector<int> block_order;
    int t1 = 0, t2 = 0, t3 = 0;
    LabelBlock low;      // first (m-s)/2 labels
    LabelBlock pendant;  // middle s labels
    LabelBlock high;     // last (m-s)/2 labels
    /// Per input spider: the two held-back legs (0-based), or {-1, -1}.
    /// Stars hold back their third and fourth legs, mixed-pendant spiders
    /// their first two pendant legs, the last class its first two even legs.
    std::vector<std::array<int, 2>> reserved;
    Label m_prime = 0;  // the special pair of the i-th middle spider is
                        // {m_prime + 2i - 1, m_prime + 2i}
};

inline Params compute_params(const SpiderForest& forest, Label k) {
    if (auto report = validate_for_scheme(forest, Scheme::C); !report.ok())
        throw std::invalid_argument("forest outside scheme-c hypothesis:\n" +
                                    report.to_string());
    if (k < 0)
        throw std::invalid_argument("scheme c requires k >= 0");

    Params p;
    p.k = k;
    p.m = forest.edge_count();
    const int t = forest.spider_count();
    for (const auto& sp : forest.spiders())
        p.s += sp.one_leg_count();
    if ((p.m - p.s) % 2 != 0)
        throw std::logic_error("scheme c parity invariant violated");

    for (const auto& sp : forest.spiders()) {
        if (sp.is_star())
            p.classes.push_back(sp.leg_count() == 3 ? SpiderClass::Star3
                                                    : SpiderClass::StarBig);
        else
            p.classes.push_back(sp.one_leg_count() >= 2 ? SpiderClass::MixedPendants
                                                        : SpiderClass::FewPendants);
    }
    for (SpiderClass c : {SpiderClass::Star3, SpiderClass::StarBig,
                          SpiderClass::MixedPendants, SpiderClass::FewPendants})
        for (int i = 0; i < t; ++i)
            if (p.classes[i] == c)
                p.block_order.push_back(i);
    for (int i = 0; i < t; ++i) {
        p.t1 += p.classes[i] == SpiderClass::Star3;
        p.t2 += p.classes[i] == SpiderClass::Star3 || p.classes[i] == SpiderClass::StarBig;
        p.t3 += p.classes[i] != SpiderClass::FewPendants;
    }

    const Label half = (p.m - p.s) / 2;
    p.low = {k + 1, k + half};
    p.pendant = {k + half + 1, k + half + p.s};
    p.high = {k + half + p.s + 1, k + p.m};

    for (int i = 0; i < t; ++i) {
        const auto& legs = forest.spiders()[i].legs;
        std::array<int, 2> r{-1, -1};
        auto pick_two = [&](auto&& want) {
            int found = 0;
            for (int j = 0; j < static_cast<int>(legs.size()) && found < 2; ++j)
                if (want(legs[j]))
                    r[found++] = j;
            if (found != 2)
                throw std::logic_error("scheme c could not hold back two legs");
        };
        switch (p.classes[i]) {
            case SpiderClass::Star3:
                break;
            case SpiderClass::StarBig:
                r = {2, 3};
                break;
            case SpiderClass::MixedPendants:
                pick_two([](int len) { return len == 1; });
                break;
            case SpiderClass::FewPendants:
                pick_two([](int len) { return len % 2 == 0; });
                break;
        }
        p.reserved.push_back(r);
    }
    p.m_prime = k + (p.m + p.s) / 2 - p.t2 - 2 * static_cast<Label>(p.t3);
    return p;
}

/// A repair swap: the two labels exchanged and the input spider indices
/// (1-based) of the centers whose sums moved.
struct Switch {
    Label label_a = 0;
    Label label_b = 0;
    int spider_a = 0;
    int spider_b = 0;
};
using SwitchLog = std::vector<Switch>;

/// Raised when the repair scan cannot separate the center sums. The
/// offending instance is preserved for reporting.
class ConstructionFailure : public std::runtime_error {
public:
    ConstructionFailure(const std::string& what, std::string forest_text_, Label k_)
        : std::runtime_error(what), forest_text(std::move(forest_text_)), k(k_) {}

    std::string forest_text;
    Label k = 0;
};

/// Positions (0-based, into `sums`) in [t1, t3) whose center sum equals
/// the center sum of some position in [t3, sums.size()).
inline std::vector<int> find_trouble(int t1, int t3, const std::vector<Label>& sums) {
    std::unordered_set<Label> tail(sums.begin() + t3, sums.end());
    std::vector<int> hits;
    for (int pos = t1; pos < t3; ++pos)
        if (tail.count(sums[pos]))
            hits.push_back(pos);
    return hits;
}

struct Result {
    Labeling labeling;
    SwitchLog switches;
    std::vector<int> final_order;       // spider0 by final position
    std::vector<Label> prerepair_sums;  // center sums by final position
    std::vector<Label> final_sums;      // center sums after repair
    Label m_prime = 0;
    std::vector<int> trouble_initial;   // 0-based final positions
};

inline Result label_full(const SpiderForest& forest, Label k) {
    Params p = compute_params(forest, k);
    const auto& spiders = forest.spiders();
    const int t = forest.spider_count();
    LabelWriter writer(forest);
    auto reserved_slot = [&p](int sp, int j) {
        return p.reserved[sp][0] == j || p.reserved[sp][1] == j;
    };

    // Symmetric pendant pairs on the stars, then the three-leg stars'
    // remaining leg, consecutively above the pair lows.
    for (int i = 0; i < p.t2; ++i) {
        int sp = p.block_order[i];
        writer.assign(sp, 0, 1, p.pendant.lo + i);
        writer.assign(sp, 1, 1, p.pendant.hi - i);
    }
    for (int i = 0; i < p.t1; ++i)
        writer.assign(p.block_order[i], 2, 1, p.pendant.lo + p.t2 + i);

    // Alternating low/high walk over the even legs that are not held back,
    // blocks in class order, legs in input order.
    AscendingCursor low(p.low);
    AscendingCursor high(p.high);
    for (int pos = 0; pos < t; ++pos) {
        int sp = p.block_order[pos];
        for (int j = 0; j < spiders[sp].leg_count(); ++j)
            if (spiders[sp].legs[j] > 1 && !reserved_slot(sp, j))
                label_alternating(writer, sp, j, spiders[sp].legs[j], low, high);
    }

    // Loose pendant legs: not in a star pair, not a third leg, not held
    // back. They take the middle-block labels between the star thirds and
    // the special pairs.
    AscendingCursor loose(LabelBlock{p.pendant.lo + p.t1 + p.t2,
                                     p.m_prime + 2 * p.t1});
    for (int pos = 0; pos < t; ++pos) {
        int sp = p.block_order[pos];
        for (int j = 0; j < spiders[sp].leg_count(); ++j)
            if (spiders[sp].legs[j] == 1 && !reserved_slot(sp, j) &&
                writer.at(sp, j, 1) == kUnassigned)
                writer.assign(sp, j, 1, loose.take());
    }
    if (!loose.exhausted())
        throw std::logic_error("scheme c pendant accounting violated");

    // Partial center sums decide the final order of the two middle classes
    // and of the last class (stable within each).
    std::vector<Label> partial(t, 0);
    for (int sp = 0; sp < t; ++sp)
        for (int j = 0; j < spiders[sp].leg_count(); ++j) {
            Label x = writer.at(sp, j, spiders[sp].legs[j]);
            if (x != kUnassigned)
                partial[sp] += x;
        }
    std::vector<int> order = p.block_order;
    auto by_partial = [&partial](int x, int y) { return partial[x] < partial[y]; };
    std::stable_sort(order.begin() + p.t1, order.begin() + p.t3, by_partial);
    std::stable_sort(order.begin() + p.t3, order.end(), by_partial);

    // Held-back even legs of the last class, in final order, continuing
    // the same low/high cursors.
    for (int pos = p.t3; pos < t; ++pos) {
        int sp = order[pos];
        for (int slot : {0, 1})
            label_alternating(writer, sp, p.reserved[sp][slot],
                              spiders[sp].legs[p.reserved[sp][slot]], low, high);
    }
    if (!low.exhausted() || !high.exhausted())
        throw std::logic_error("scheme c even-leg accounting violated");

    // Special pairs on the held-back pendant legs of the middle classes.
    for (int pos = p.t1; pos < p.t3; ++pos) {
        int sp = order[pos];
        Label i1 = pos + 1;
        writer.assign(sp, p.reserved[sp][0], 1, p.m_prime + 2 * i1 - 1);
        writer.assign(sp, p.reserved[sp][1], 1, p.m_prime + 2 * i1);
    }

    std::vector<Label> sums(t, 0);
    for (int pos = 0; pos < t; ++pos) {
        int sp = order[pos];
        for (int j = 0; j < spiders[sp].leg_count(); ++j)
            sums[pos] += writer.at(sp, j, spiders[sp].legs[j]);
    }

    // Spacing guarantees the repair scan relies on. A violation here is a
    // construction bug, not a repairable instance.
    for (int pos = 1; pos < p.t1; ++pos)
        if (sums[pos] - sums[pos - 1] != 1)
            throw std::logic_error("scheme c spacing: three-leg stars not consecutive");
    if (p.t1 >= 1 && p.t3 > p.t1 && sums[p.t1] - sums[p.t1 - 1] < 3)
        throw std::logic_error("scheme c spacing: star block too close to middle block");
    for (int pos = p.t1 + 1; pos < p.t3; ++pos)
        if (sums[pos] - sums[pos - 1] < 4)
            throw std::logic_error("scheme c spacing: middle-class gap below 4");
    for (int pos = p.t3 + 1; pos < t; ++pos)
        if (sums[pos] - sums[pos - 1] < 4)
            throw std::logic_error("scheme c spacing: last-class gap below 4");

    Result result;
    result.final_order = order;
    result.prerepair_sums = sums;
    result.m_prime = p.m_prime;
    result.trouble_initial = find_trouble(p.t1, p.t3, sums);

    std::unordered_set<Label> tail(sums.begin() + p.t3, sums.end());
    auto in_tail = [&tail](Label x) { return tail.count(x) > 0; };
    auto swap_specials = [&](int pos_a, int slot_a, int pos_b, int slot_b) {
        int sa = order[pos_a], sb = order[pos_b];
        writer.swap_labels(sa, p.reserved[sa][slot_a], 1,
                           sb, p.reserved[sb][slot_b], 1);
    };

    // Left-to-right scan: a colliding middle-class center trades its upper
    // special for the next center's lower special, shifting the two sums
    // by +1 and -1. The traded label pair is consecutive, so the collision
    // moves off the tail sums without re-entering them.
    for (int pos = p.t1; pos + 2 < p.t3; ++pos) {
        if (!in_tail(sums[pos]))
            continue;
        Label i1 = pos + 1;
        swap_specials(pos, 1, pos + 1, 0);
        sums[pos] += 1;
        sums[pos + 1] -= 1;
        result.switches.push_back({p.m_prime + 2 * i1, p.m_prime + 2 * i1 + 1,
                                   order[pos] + 1, order[pos + 1] + 1});
    }

    // The last two middle-class centers have no right neighbor to trade
    // with, so they trade with each other: first by 1, and if that leaves
    // either colliding, by 2 instead.
    if (p.t3 - p.t1 >= 2) {
        int a = p.t3 - 2, b = p.t3 - 1;
        if (in_tail(sums[a]) || in_tail(sums[b])) {
            swap_specials(a, 1, b, 0);
            sums[a] += 1;
            sums[b] -= 1;
            if (in_tail(sums[a]) || in_tail(sums[b])) {
                swap_specials(a, 1, b, 0);  // revert
                sums[a] -= 1;
                sums[b] += 1;
                swap_specials(a, 1, b, 1);
                sums[a] += 2;
                sums[b] -= 2;
                result.switches.push_back({p.m_prime + 2 * (p.t3 - 1),
                                           p.m_prime + 2 * p.t3,
                                           order[a] + 1, order[b] + 1});
            } else {
                result.switches.push_back({p.m_prime + 2 * (p.t3 - 1),
                                           p.m_prime + 2 * p.t3 - 1,
                                           order[a] + 1, order[b] + 1});
            }
        }
    }

    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "scheme c cannot separate center sums: " << why << " (k = " << k
           << ", forest:\n" << to_text(forest) << "center sums:";
        for (Label x : sums)
            os << ' ' << x;
        os << ')';
        throw ConstructionFailure(os.str(), to_text(forest), k);
    };
    if (auto left = find_trouble(p.t1, p.t3, sums); !left.empty())
        fail("collision with a last-class center survived the repair scan");
    std::vector<Label> sorted = sums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("two center sums coincide");

    result.final_sums = sums;
    result.labeling = writer.finish(k);
    return result;
}

inline Labeling label(const SpiderForest& forest, Label k) {
    return label_full(forest, k).labeling;
}

}  // namespace spiderlab::scheme_c
