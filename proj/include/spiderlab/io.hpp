// spiderlab/io.hpp -- JSON round-trips for forests and labelings, plus
// Graphviz export. JSON layouts:
//
//   forest    {"spiders": [[5, 3, 3, 5], [3, 3, 4]]}
//   labeling  {"k": 0,
//              "edges": [{"spider": 1, "leg": 1, "pos": 1, "label": 21}, ...],
//              "repairs": [{"label_a": 13, "label_b": 14,
//                           "spider_a": 1, "spider_b": 2}, ...]}
//
// "repairs" appears only for labelings produced by the scheme with the
// repair scan. Serialization is deterministic: canonical edge order, keys
// alphabetical.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "spiderlab/forest.hpp"
#include "spiderlab/scheme_c.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab {

inline nlohmann::json forest_to_json(const SpiderForest& forest) {
    nlohmann::json spiders = nlohmann::json::array();
    for (const auto& sp : forest.spiders())
        spiders.push_back(sp.legs);
    return nlohmann::json{{"spiders", spiders}};
}

inline SpiderForest forest_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("spiders") || !doc["spiders"].is_array())
        throw ParseError("forest json: expected an object with a 'spiders' array");
    std::vector<SpiderSpec> spiders;
    for (const auto& entry : doc["spiders"]) {
        if (!entry.is_array() || entry.empty())
            throw ParseError("forest json: each spider must be a nonempty array of lengths");
        SpiderSpec sp;
        for (const auto& len : entry) {
            if (!len.is_number_integer() || len.get<long long>() < 1)
                throw ParseError("forest json: leg lengths must be integers >= 1");
            sp.legs.push_back(len.get<int>());
        }
        spiders.push_back(std::move(sp));
    }
    if (spiders.empty())
        throw ParseError("forest json: empty forest");
    return SpiderForest(std::move(spiders));
}

inline nlohmann::json labeling_to_json(const SpiderForest& forest, const Labeling& labeling,
                                       const scheme_c::SwitchLog* repairs = nullptr) {
    require_match(forest, labeling);
    nlohmann::json edges = nlohmann::json::array();
    for (int id = 0; id < forest.edge_count(); ++id) {
        EdgeRef e = forest.edge_at(id);
        edges.push_back({{"spider", e.spider},
                         {"leg", e.leg},
                         {"pos", e.pos},
                         {"label", labeling.labels[id]}});
    }
    nlohmann::json doc{{"k", labeling.k}, {"edges", edges}};
    if (repairs) {
        nlohmann::json swaps = nlohmann::json::array();
        for (const auto& sw : *repairs)
            swaps.push_back({{"label_a", sw.label_a},
                             {"label_b", sw.label_b},
                             {"spider_a", sw.spider_a},
                             {"spider_b", sw.spider_b}});
        doc["repairs"] = std::move(swaps);
    }
    return doc;
}

/// Parses a labeling against a known forest. Every edge of the forest must
/// appear exactly once; unknown or repeated refs are reported by address.
inline Labeling labeling_from_json(const SpiderForest& forest, const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("edges") ||
        !doc["edges"].is_array())
        throw ParseError("labeling json: expected an object with 'k' and an 'edges' array");
    if (!doc["k"].is_number_integer())
        throw ParseError("labeling json: 'k' must be an integer");
    Labeling out;
    out.k = doc["k"].get<Label>();
    out.labels.assign(forest.edge_count(), kUnassigned);
    std::vector<bool> seen(forest.edge_count(), false);
    for (const auto& entry : doc["edges"]) {
        for (const char* key : {"spider", "leg", "pos", "label"})
            if (!entry.contains(key) || !entry[key].is_number_integer())
                throw ParseError(std::string("labeling json: edge entry needs integer '") +
                                 key + "'");
        EdgeRef e{entry["spider"].get<int>(), entry["leg"].get<int>(),
                  entry["pos"].get<int>()};
        int id;
        try {
            id = forest.edge_index(e);
        } catch (const std::out_of_range&) {
            throw ParseError("labeling json: " + e.to_string() +
                             " does not exist in the forest");
        }
        if (seen[id])
            throw ParseError("labeling json: " + e.to_string() + " appears twice");
        seen[id] = true;
        out.labels[id] = entry["label"].get<Label>();
    }
    for (int id = 0; id < forest.edge_count(); ++id)
        if (!seen[id])
            throw ParseError("labeling json: " + forest.edge_at(id).to_string() +
                             " is missing");
    return out;
}

inline scheme_c::SwitchLog repairs_from_json(const nlohmann::json& doc) {
    scheme_c::SwitchLog log;
    if (!doc.is_object() || !doc.contains("repairs"))
        return log;
    for (const auto& entry : doc["repairs"])
        log.push_back({entry.at("label_a").get<Label>(), entry.at("label_b").get<Label>(),
                       entry.at("spider_a").get<int>(), entry.at("spider_b").get<int>()});
    return log;
}

/// Graphviz rendering: one undirected graph, labels on edges, the vertex
/// sum as an exterior label (xlabel) on every vertex.
inline std::string to_dot(const SpiderForest& forest, const Labeling& labeling) {
    auto report = vertex_sums(forest, labeling);
    auto node_name = [](const VertexRef& v) {
        std::ostringstream os;
        if (v.is_center())
            os << 'c' << v.spider;
        else
            os << 'v' << v.spider << '_' << v.leg << '_' << v.pos;
        return os.str();
    };
    std::ostringstream os;
    os << "graph spider_forest {\n";
    os << "  node [shape=point];\n";
    for (int id = 0; id < forest.vertex_count(); ++id) {
        VertexRef v = forest.vertex_at(id);
        os << "  " << node_name(v) << " [xlabel=\"" << report.sums[id] << "\"];\n";
    }
    for (int id = 0; id < forest.edge_count(); ++id) {
        auto [u, w] = forest.edge_endpoints(forest.edge_at(id));
        os << "  " << node_name(u) << " -- " << node_name(w) << " [label=\""
           << labeling.labels[id] << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace spiderlab
