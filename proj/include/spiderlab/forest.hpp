// spiderlab/forest.hpp -- spider-forest data model, canonical addressing,
// text parsing and per-scheme validation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spiderlab {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One spider: ordered list of leg lengths, in edges. Leg order is
/// semantically meaningful -- every deterministic tie-break downstream
/// (reserved-leg choice, leg arrangement) derives from it.
struct SpiderSpec {
    std::vector<int> legs;

    int leg_count() const { return static_cast<int>(legs.size()); }
    int edge_count() const { return std::accumulate(legs.begin(), legs.end(), 0); }

    /// True when every leg is a pendant edge (the spider is a star).
    bool is_star() const {
        return std::all_of(legs.begin(), legs.end(), [](int l) { return l == 1; });
    }
    /// s_i: number of 1-legs.
    int one_leg_count() const {
        return static_cast<int>(std::count(legs.begin(), legs.end(), 1));
    }
    /// r_i: number of legs of length at least two.
    int long_leg_count() const { return leg_count() - one_leg_count(); }
};

/// Canonical edge address. All fields 1-based; position 1 is the pendant
/// edge, position == leg length is the center-incident edge.
struct EdgeRef {
    int spider = 0;
    int leg = 0;
    int pos = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << "spider " << spider << " leg " << leg << " pos " << pos;
        return os.str();
    }
};

/// Canonical vertex address. Non-center vertices are addressed like edges
/// (position p = p-th vertex counted from the leaf, so position 1 is the
/// leaf and position == leg length is the vertex adjacent to the center).
/// Centers use leg == 0, pos == 0.
struct VertexRef {
    int spider = 0;
    int leg = 0;
    int pos = 0;

    static VertexRef center(int spider) { return VertexRef{spider, 0, 0}; }
    bool is_center() const { return leg == 0; }

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;

    std::string to_string() const {
        std::ostringstream os;
        if (is_center())
            os << "center of spider " << spider;
        else
            os << "spider " << spider << " leg " << leg << " vertex " << pos;
        return os.str();
    }
};

/// An ordered union of spiders with O(1) canonical edge/vertex indexing.
/// Immutable after construction.
class SpiderForest {
public:
    explicit SpiderForest(std::vector<SpiderSpec> spiders) : spiders_(std::move(spiders)) {
        if (spiders_.empty())
            throw ParseError("forest must contain at least one spider");
        for (std::size_t i = 0; i < spiders_.size(); ++i) {
            if (spiders_[i].legs.empty())
                throw ParseError("spider " + std::to_string(i + 1) + " has no legs");
            for (std::size_t j = 0; j < spiders_[i].legs.size(); ++j)
                if (spiders_[i].legs[j] < 1)
                    throw ParseError("spider " + std::to_string(i + 1) + " leg " +
                                     std::to_string(j + 1) + " has length < 1");
        }
        edge_base_.reserve(spiders_.size());
        vertex_base_.reserve(spiders_.size());
        int e = 0;
        int v = 0;
        for (const auto& sp : spiders_) {
            std::vector<int> leg_base(sp.legs.size());
            for (std::size_t j = 0; j < sp.legs.size(); ++j) {
                leg_base[j] = e;
                e += sp.legs[j];
            }
            edge_base_.push_back(std::move(leg_base));
            vertex_base_.push_back(v);
            v += 1 + sp.edge_count();  // center plus one vertex per edge
        }
        m_ = e;
        vertex_count_ = v;
        incidence_.resize(vertex_count_);
        for (int id = 0; id < m_; ++id) {
            auto [u, w] = edge_endpoints(edge_at(id));
            incidence_[vertex_index(u)].push_back(id);
            incidence_[vertex_index(w)].push_back(id);
        }
    }

    int spider_count() const { return static_cast<int>(spiders_.size()); }
    int edge_count() const { return m_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<SpiderSpec>& spiders() const { return spiders_; }
    const SpiderSpec& spider(int index1) const { return spiders_.at(index1 - 1); }

    int leg_length(int spider0, int leg0) const { return spiders_[spider0].legs[leg0]; }

    int edge_index(const EdgeRef& r) const {
        check_edge(r);
        return edge_base_[r.spider - 1][r.leg - 1] + r.pos - 1;
    }

    EdgeRef edge_at(int id) const {
        if (id < 0 || id >= m_)
            throw std::out_of_range("edge id out of range");
        int s = 0;
        while (s + 1 < spider_count() && edge_base_[s + 1][0] <= id)
            ++s;
        const auto& bases = edge_base_[s];
        int leg = static_cast<int>(std::upper_bound(bases.begin(), bases.end(), id) -
                                   bases.begin()) - 1;
        return EdgeRef{s + 1, leg + 1, id - bases[leg] + 1};
    }

    int vertex_index(const VertexRef& r) const {
        if (r.spider < 1 || r.spider > spider_count())
            throw std::out_of_range("vertex ref: bad spider index");
        int base = vertex_base_[r.spider - 1];
        if (r.is_center())
            return base;
        check_edge(EdgeRef{r.spider, r.leg, r.pos});  // same bounds as edges
        return base + 1 + edge_base_[r.spider - 1][r.leg - 1] -
               edge_base_[r.spider - 1][0] + r.pos - 1;
    }

    VertexRef vertex_at(int id) const {
        if (id < 0 || id >= vertex_count_)
            throw std::out_of_range("vertex id out of range");
        int s = 0;
        while (s + 1 < spider_count() && vertex_base_[s + 1] <= id)
            ++s;
        int off = id - vertex_base_[s];
        if (off == 0)
            return VertexRef::center(s + 1);
        off -= 1;
        const auto& legs = spiders_[s].legs;
        for (std::size_t j = 0; j < legs.size(); ++j) {
            if (off < legs[j])
                return VertexRef{s + 1, static_cast<int>(j) + 1, off + 1};
            off -= legs[j];
        }
        throw std::logic_error("vertex id lookup failed");
    }

    /// Endpoints of an edge: the p-th and (p+1)-th vertices from the leaf,
    /// the latter being the center when p equals the leg length.
    std::pair<VertexRef, VertexRef> edge_endpoints(const EdgeRef& r) const {
        check_edge(r);
        VertexRef near{r.spider, r.leg, r.pos};
        if (r.pos == spider(r.spider).legs[r.leg - 1])
            return {near, VertexRef::center(r.spider)};
        return {near, VertexRef{r.spider, r.leg, r.pos + 1}};
    }

    int degree(const VertexRef& r) const {
        if (r.is_center())
            return spider(r.spider).leg_count();
        return r.pos == 1 ? 1 : 2;
    }

    /// Edge ids incident to each vertex id.
    const std::vector<std::vector<int>>& incidence() const { return incidence_; }

    friend bool operator==(const SpiderForest& x, const SpiderForest& y) {
        if (x.spider_count() != y.spider_count())
            return false;
        for (int i = 0; i < x.spider_count(); ++i)
            if (x.spiders_[i].legs != y.spiders_[i].legs)
                return false;
        return true;
    }

private:
    void check_edge(const EdgeRef& r) const {
        if (r.spider < 1 || r.spider > spider_count())
            throw std::out_of_range("edge ref: bad spider index");
        const auto& sp = spiders_[r.spider - 1];
        if (r.leg < 1 || r.leg > sp.leg_count())
            throw std::out_of_range("edge ref: bad leg index");
        if (r.pos < 1 || r.pos > sp.legs[r.leg - 1])
            throw std::out_of_range("edge ref: bad position");
    }

    std::vector<SpiderSpec> spiders_;
    int m_ = 0;
    int vertex_count_ = 0;
    std::vector<std::vector<int>> edge_base_;  // per spider, per leg: first edge id
    std::vector<int> vertex_base_;             // per spider: center vertex id
    std::vector<std::vector<int>> incidence_;
};

// ---------------------------------------------------------------------------
// Text format: one spider per line, "spider <len> <len> ...".
// '#' starts a comment; blank lines are ignored.
// ---------------------------------------------------------------------------

inline SpiderForest parse_forest_text(std::string_view text) {
    std::vector<SpiderSpec> spiders;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;  // blank
        if (head != "spider")
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'spider', got '" + head + "'");
        SpiderSpec sp;
        long long len = 0;
        while (ls >> len) {
            if (len < 1)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": leg length must be >= 1");
            sp.legs.push_back(static_cast<int>(len));
        }
        if (!ls.eof())
            throw ParseError("line " + std::to_string(line_no) +
                             ": leg lengths must be integers");
        if (sp.legs.empty())
            throw ParseError("line " + std::to_string(line_no) +
                             ": spider needs at least one leg length");
        spiders.push_back(std::move(sp));
    }
    if (spiders.empty())
        throw ParseError("empty forest: no spider lines found");
    return SpiderForest(std::move(spiders));
}

inline std::string to_text(const SpiderForest& forest) {
    std::ostringstream os;
    for (const auto& sp : forest.spiders()) {
        os << "spider";
        for (int len : sp.legs)
            os << ' ' << len;
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Per-scheme validation
// ---------------------------------------------------------------------------

enum class Scheme { A, B, C };

inline char scheme_letter(Scheme s) {
    switch (s) {
        case Scheme::A: return 'a';
        case Scheme::B: return 'b';
        case Scheme::C: return 'c';
    }
    return '?';
}

struct Violation {
    int spider = 0;  // 1-based
    int leg = 0;     // 1-based, 0 for spider-level violations
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& v : violations) {
            os << "spider " << v.spider;
            if (v.leg > 0)
                os << " leg " << v.leg;
            os << ": " << v.message << '\n';
        }
        return os.str();
    }
};

/// Hypothesis check for each labeling scheme. Scheme A: every spider has
/// >= 3 legs, all of length >= 2. Scheme B: every spider has >= 3 legs.
/// Scheme C: every spider has >= 3 legs, each of length 1 or even.
inline ValidationReport validate_for_scheme(const SpiderForest& forest, Scheme scheme) {
    ValidationReport report;
    for (int i = 0; i < forest.spider_count(); ++i) {
        const auto& sp = forest.spiders()[i];
        if (sp.leg_count() < 3)
            report.violations.push_back(
                {i + 1, 0, "spider has fewer than 3 legs (degenerate)"});
        for (int j = 0; j < sp.leg_count(); ++j) {
            int len = sp.legs[j];
            if (scheme == Scheme::A && len < 2)
                report.violations.push_back({i + 1, j + 1, "leg has length 1"});
            if (scheme == Scheme::C && len > 1 && len % 2 != 0)
                report.violations.push_back(
                    {i + 1, j + 1, "leg has odd length " + std::to_string(len) + " > 1"});
        }
    }
    return report;
}

}  // namespace spiderlab
