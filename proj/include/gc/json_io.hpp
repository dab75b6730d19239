#pragma once

// JSON serialization: graphs as {"n":..,"edges":[[u,v],..]} with u<v and
// edges sorted; trees as nested arrays of leaf labels with per-vertex
// decoration slots; elements as lists of {tree, coefficient "p/q"}.

#include <json.hpp>

#include "gc/algebra.hpp"
#include "gc/graph.hpp"

namespace gc {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) es.push_back({e.at(0), e.at(1)});
    return Graph(j.at("n"), es);
}

inline json tree_to_json(const Tree& t, const Alphabet& a) {
    std::function<json(int)> rec = [&](int i) -> json {
        json node;
        node["d"] = t.node(i).letter >= 0 ? a.name(t.node(i).letter) : "";
        json ch = json::array();
        for (int c : t.node(i).children)
            ch.push_back(c > 0 ? json(c) : rec(~c));
        node["c"] = ch;
        return node;
    };
    return rec(0);
}

inline json element_to_json(const Element& e, const Alphabet& a) {
    json terms = json::array();
    for (const auto& [t, c] : e.terms())
        terms.push_back({{"tree", tree_to_json(t, a)}, {"coefficient", rational_string(c)}});
    return terms;
}

}  // namespace gc
