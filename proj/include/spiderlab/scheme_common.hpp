// spiderlab/scheme_common.hpp -- label-interval bookkeeping shared by the
// constructive schemes: contiguous label blocks, consuming cursors, the
// alternating low/high walk along a leg, and the greedy reserved-leg
// completion that makes center sums strictly decrease round by round.

#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spiderlab/forest.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab {

/// Closed integer interval of labels. hi < lo encodes the empty block.
struct LabelBlock {
    Label lo = 0;
    Label hi = -1;

    Label size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool empty() const { return size() == 0; }
    bool contains(Label x) const { return lo <= x && x <= hi; }

    std::string to_string() const {
        if (empty())
            return "[]";
        std::ostringstream os;
        os << '[' << lo << ", " << hi << ']';
        return os.str();
    }
};

/// Consumes a block bottom-up. Throws when over-drawn; the schemes size
/// their blocks exactly, so exhaustion means a construction bug.
class AscendingCursor {
public:
    AscendingCursor() = default;
    explicit AscendingCursor(LabelBlock block) : next_(block.lo), hi_(block.hi) {}

    Label take() {
        if (next_ > hi_)
            throw std::logic_error("label block exhausted (ascending)");
        return next_++;
    }
    Label peek() const {
        if (next_ > hi_)
            throw std::logic_error("label block exhausted (ascending peek)");
        return next_;
    }
    bool exhausted() const { return next_ > hi_; }

private:
    Label next_ = 0;
    Label hi_ = -1;
};

/// Consumes a block top-down.
class DescendingCursor {
public:
    DescendingCursor() = default;
    explicit DescendingCursor(LabelBlock block) : next_(block.hi), lo_(block.lo) {}

    Label take() {
        if (next_ < lo_)
            throw std::logic_error("label block exhausted (descending)");
        return next_--;
    }
    Label peek() const {
        if (next_ < lo_)
            throw std::logic_error("label block exhausted (descending peek)");
        return next_;
    }
    bool exhausted() const { return next_ < lo_; }

private:
    Label next_ = -1;
    Label lo_ = 0;
};

/// Writes labels into a Labeling under construction, refusing to assign
/// an edge twice or to leave the forest's edge set.
class LabelWriter {
public:
    explicit LabelWriter(const SpiderForest& forest) : forest_(&forest) {
        labels_.assign(forest.edge_count(), kUnassigned);
    }

    void assign(int spider0, int leg0, int pos, Label value) {
        int id = forest_->edge_index(EdgeRef{spider0 + 1, leg0 + 1, pos});
        if (labels_[id] != kUnassigned)
            throw std::logic_error("edge labeled twice: " +
                                   forest_->edge_at(id).to_string());
        labels_[id] = value;
    }

    Label at(int spider0, int leg0, int pos) const {
        return labels_[forest_->edge_index(EdgeRef{spider0 + 1, leg0 + 1, pos})];
    }

    /// Exchanges the labels of two already-assigned edges.
    void swap_labels(int spider_a, int leg_a, int pos_a,
                     int spider_b, int leg_b, int pos_b) {
        int ida = forest_->edge_index(EdgeRef{spider_a + 1, leg_a + 1, pos_a});
        int idb = forest_->edge_index(EdgeRef{spider_b + 1, leg_b + 1, pos_b});
        if (labels_[ida] == kUnassigned || labels_[idb] == kUnassigned)
            throw std::logic_error("swap of an unlabeled edge");
        std::swap(labels_[ida], labels_[idb]);
    }

    /// Finished labeling; throws if any edge was never assigned.
    Labeling finish(Label k) const {
        for (int id = 0; id < static_cast<int>(labels_.size()); ++id)
            if (labels_[id] == kUnassigned)
                throw std::logic_error("edge never labeled: " +
                                       forest_->edge_at(id).to_string());
        return Labeling{k, labels_};
    }

private:
    const SpiderForest* forest_;
    std::vector<Label> labels_;
};

/// Labels positions 1..limit of one leg, odd positions from `low`, even
/// positions from `high`, both ascending. For an even leg limit is the leg
/// length (the center edge takes the last high label); for an odd leg limit
/// is length-1 and the center edge is the caller's business.
inline void label_alternating(LabelWriter& writer, int spider0, int leg0, int limit,
                              AscendingCursor& low, AscendingCursor& high) {
    for (int pos = 1; pos <= limit; ++pos)
        writer.assign(spider0, leg0, pos, pos % 2 == 1 ? low.take() : high.take());
}

/// One reserved leg per spider, in input order.
struct ReservedLeg {
    int spider0 = 0;
    int leg0 = 0;
    int length = 0;
    bool odd = false;  // parity of length; 1-legs count as odd
};

struct ReservedRound {
    int spider0 = 0;
    bool even_case = false;  // completed via the even-reserved branch
    Label center_sum = 0;    // full center sum right after completion
};

/// Completes the reserved legs, one spider per round. Each round maximizes
/// the provisional center sum (partial sum plus the largest unused label of
/// the spider's parity block); ties prefer even-reserved spiders, then the
/// lowest input index. The chosen spider's leg is filled top-down: an
/// even-case leg alternates the largest unused odd/even-block labels, an
/// odd-case leg puts the largest unused odd-block label on the center edge
/// and alternates the rest. Center sums come out strictly decreasing.
inline std::vector<ReservedRound> run_reserved_leg_process(
    LabelWriter& writer, const std::vector<ReservedLeg>& reserved,
    std::vector<Label> center_partial, LabelBlock odd_block, LabelBlock even_block) {
    DescendingCursor odd_top(odd_block);
    DescendingCursor even_top(even_block);
    std::vector<ReservedRound> rounds;
    std::vector<bool> done(reserved.size(), false);

    for (std::size_t round = 0; round < reserved.size(); ++round) {
        int pick = -1;
        bool pick_even = false;
        Label best = 0;
        for (std::size_t i = 0; i < reserved.size(); ++i) {
            if (done[i])
                continue;
            Label candidate =
                center_partial[i] + (reserved[i].odd ? odd_top.peek() : even_top.peek());
            bool better = pick < 0 || candidate > best;
            bool tie_upgrade = pick >= 0 && candidate == best && !pick_even &&
                               !reserved[i].odd;
            if (better || tie_upgrade) {
                pick = static_cast<int>(i);
                pick_even = !reserved[i].odd;
                best = candidate;
            }
        }
        const ReservedLeg& leg = reserved[pick];
        done[pick] = true;

        Label center_edge = 0;
        if (pick_even) {
            int p = leg.length / 2;
            for (int i = p; i >= 1; --i) {
                writer.assign(leg.spider0, leg.leg0, 2 * i, even_top.take());
                writer.assign(leg.spider0, leg.leg0, 2 * i - 1, odd_top.take());
            }
            center_edge = writer.at(leg.spider0, leg.leg0, leg.length);
        } else {
            int p = (leg.length - 1) / 2;
            center_edge = odd_top.take();
            writer.assign(leg.spider0, leg.leg0, leg.length, center_edge);
            for (int i = p; i >= 1; --i)
                writer.assign(leg.spider0, leg.leg0, 2 * i - 1, odd_top.take());
            for (int i = p; i >= 1; --i)
                writer.assign(leg.spider0, leg.leg0, 2 * i, even_top.take());
        }
        center_partial[pick] += center_edge;
        rounds.push_back({leg.spider0, pick_even, center_partial[pick]});
    }
    return rounds;
}

}  // namespace spiderlab
