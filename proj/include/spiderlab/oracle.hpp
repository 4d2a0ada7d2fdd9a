// spiderlab/oracle.hpp -- exhaustive ground truth for small instances.
// Enumerates bijections from the edge set onto [k+1, k+m] in canonical
// edge order with labels tried ascending, so the witness (when one
// exists) is the lexicographically least solution. Pruning cuts a branch
// only when two fully-summed vertices collide, which never discards a
// viable completion; verdicts with and without pruning agree.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "spiderlab/forest.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab::oracle {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hard ceiling on instance size, 12 edges unless the SPIDERLAB_MAX_EDGES
/// environment variable says otherwise. 12! label orders is already half a
/// minute of work; the ceiling keeps an accidental large instance from
/// hanging a test run.
inline int hard_edge_cap() {
    if (const char* env = std::getenv("SPIDERLAB_MAX_EDGES")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1)
            throw BudgetError("SPIDERLAB_MAX_EDGES must be a positive integer, got '" +
                              std::string(env) + "'");
        return static_cast<int>(value);
    }
    return 12;
}

struct Options {
    int edge_budget = 10;
    bool prune = true;
    unsigned threads = 1;  // > 1 splits the search on the first edge's label
};

struct Result {
    bool feasible = false;
    std::optional<Labeling> witness;
    Label k = 0;
    unsigned long long nodes_examined = 0;  // label placements attempted
};

namespace detail {

struct Frame {
    const SpiderForest* forest;
    Label k;
    int m;
    bool prune;
    std::vector<std::pair<int, int>> ends;  // per edge id: endpoint vertex ids
    std::vector<int> remaining;             // per vertex id: unlabeled incident edges
    std::vector<Label> sums;                // per vertex id: partial sum
    std::vector<Label> done_sums;           // sums of completed vertices
    std::vector<Label> assignment;          // per edge id
    unsigned used = 0;                      // bitmask over [k+1, k+m]
    unsigned long long nodes = 0;
    const std::atomic<bool>* stop = nullptr;

    explicit Frame(const SpiderForest& f, Label k_, bool prune_)
        : forest(&f), k(k_), m(f.edge_count()), prune(prune_) {
        ends.reserve(m);
        for (int id = 0; id < m; ++id) {
            auto [u, w] = f.edge_endpoints(f.edge_at(id));
            ends.emplace_back(f.vertex_index(u), f.vertex_index(w));
        }
        remaining.assign(f.vertex_count(), 0);
        for (int v = 0; v < f.vertex_count(); ++v)
            remaining[v] = static_cast<int>(f.incidence()[v].size());
        sums.assign(f.vertex_count(), 0);
        assignment.assign(m, kUnassigned);
    }

    // Applies one label; returns false (after undoing nothing) if pruning
    // rejects the branch. done_count tracks how much of done_sums is live.
    bool place(int edge, Label value, std::size_t& done_count) {
        assignment[edge] = value;
        auto [u, w] = ends[edge];
        for (int v : {u, w}) {
            sums[v] += value;
            if (--remaining[v] == 0 && prune) {
                for (std::size_t i = 0; i < done_count; ++i)
                    if (done_sums[i] == sums[v]) {
                        unplace_partial(edge, value, v);
                        return false;
                    }
                if (done_sums.size() == done_count)
                    done_sums.push_back(sums[v]);
                else
                    done_sums[done_count] = sums[v];
                ++done_count;
            }
        }
        return true;
    }

    // Rolls back place() up to and including vertex `upto` of edge `edge`.
    void unplace_partial(int edge, Label value, int upto) {
        auto [u, w] = ends[edge];
        for (int v : {u, w}) {
            sums[v] -= value;
            ++remaining[v];
            if (v == upto)
                break;
        }
        assignment[edge] = kUnassigned;
    }

    void unplace(int edge, Label value, std::size_t& done_count) {
        auto [u, w] = ends[edge];
        for (int v : {w, u}) {
            if (remaining[v] == 0 && prune)
                --done_count;
            ++remaining[v];
            sums[v] -= value;
        }
        assignment[edge] = kUnassigned;
    }

    bool search(int edge, std::size_t done_count, std::optional<Labeling>& witness) {
        if (stop && stop->load(std::memory_order_relaxed))
            return false;
        if (edge == m) {
            if (!prune) {
                std::vector<Label> all = sums;
                std::sort(all.begin(), all.end());
                if (std::adjacent_find(all.begin(), all.end()) != all.end())
                    return false;
            }
            witness = Labeling{k, assignment};
            return true;
        }
        for (int bit = 0; bit < m; ++bit) {
            if (used & (1u << bit))
                continue;
            ++nodes;
            used |= 1u << bit;
            std::size_t done_before = done_count;
            if (place(edge, k + 1 + bit, done_count)) {
                if (search(edge + 1, done_count, witness))
                    return true;
                unplace(edge, k + 1 + bit, done_count);
            }
            done_count = done_before;
            used &= ~(1u << bit);
        }
        return false;
    }
};

inline void check_budget(const SpiderForest& forest, const Options& opts) {
    int cap = hard_edge_cap();
    int m = forest.edge_count();
    if (m > opts.edge_budget)
        throw BudgetError("oracle refuses " + std::to_string(m) +
                          " edges: over the budget of " + std::to_string(opts.edge_budget));
    if (m > cap)
        throw BudgetError("oracle refuses " + std::to_string(m) +
                          " edges: over the hard cap of " + std::to_string(cap) +
                          " (set SPIDERLAB_MAX_EDGES to change it)");
    if (m > 31)
        throw BudgetError("oracle label mask cannot exceed 31 edges");
}

}  // namespace detail

inline Result brute_force(const SpiderForest& forest, Label k, const Options& opts = {}) {
    detail::check_budget(forest, opts);
    const int m = forest.edge_count();
    Result result;
    result.k = k;

    unsigned threads = std::min<unsigned>(opts.threads, static_cast<unsigned>(m));
    if (threads <= 1) {
        detail::Frame frame(forest, k, opts.prune);
        std::optional<Labeling> witness;
        result.feasible = frame.search(0, 0, witness);
        result.witness = std::move(witness);
        result.nodes_examined = frame.nodes;
        return result;
    }

    // Parallel split: first-edge labels are dealt round-robin to workers.
    // Feasibility matches the sequential verdict; the witness is whichever
    // solution is found first, not necessarily the least one.
    std::atomic<bool> stop{false};
    std::mutex found_mutex;
    std::optional<Labeling> found;
    std::atomic<unsigned long long> nodes{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (int bit = static_cast<int>(w); bit < m;
                 bit += static_cast<int>(threads)) {
                if (stop.load(std::memory_order_relaxed))
                    break;
                detail::Frame frame(forest, k, opts.prune);
                frame.stop = &stop;
                std::size_t done_count = 0;
                ++frame.nodes;
                frame.used |= 1u << bit;
                std::optional<Labeling> witness;
                if (frame.place(0, k + 1 + bit, done_count) &&
                    frame.search(1, done_count, witness)) {
                    std::lock_guard<std::mutex> hold(found_mutex);
                    if (!found) {
                        found = std::move(witness);
                        stop.store(true, std::memory_order_relaxed);
                    }
                }
                nodes += frame.nodes;
            }
        });
    }
    for (auto& th : pool)
        th.join();
    result.feasible = found.has_value();
    result.witness = std::move(found);
    result.nodes_examined = nodes.load();
    return result;
}

struct MinKResult {
    std::map<Label, bool> feasibility;
    std::optional<Label> min_feasible;
};

/// Feasibility of every shift in [lo, hi], plus the least feasible one.
inline MinKResult min_k(const SpiderForest& forest, Label lo, Label hi,
                        const Options& opts = {}) {
    if (lo > hi)
        throw std::invalid_argument("min_k: empty shift range");
    MinKResult out;
    for (Label k = lo; k <= hi; ++k) {
        bool feasible = brute_force(forest, k, opts).feasible;
        out.feasibility[k] = feasible;
        if (feasible && !out.min_feasible)
            out.min_feasible = k;
    }
    return out;
}

struct CrossCheckResult {
    bool scheme_output_valid = false;
    bool oracle_feasible = false;
    bool agree = false;  // scheme produced a valid labeling and the oracle concurs
    std::string detail;
};

}  // namespace spiderlab::oracle
