#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypertopo/colorings.hpp"
#include "hypertopo/core.hpp"
#include "hypertopo/graph.hpp"
#include "hypertopo/intersected.hpp"
#include "json.hpp"

namespace hypertopo {

using json = nlohmann::json;

// {"ground":[...': ints],"edges":[[...],...],"labels":{"name":int,...}?}
// With a label dictionary, ground/edge entries may be the label strings.
struct HypergraphDocument {
    Hypergraph hypergraph;
    std::map<std::string, int> labels;
};

namespace detail {

inline int doc_value(const json& j, const std::map<std::string, int>& labels) {
    if (j.is_number_integer()) return j.get<int>();
    if (j.is_string()) {
        auto it = labels.find(j.get<std::string>());
        if (it == labels.end())
            throw std::invalid_argument("unknown label '" + j.get<std::string>() + "'");
        return it->second;
    }
    throw std::invalid_argument("vertex entries must be integers or dictionary labels");
}

}  // namespace detail

inline HypergraphDocument parse_hypergraph_document(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph document needs 'ground' and 'edges'");
    HypergraphDocument doc;
    if (j.contains("labels"))
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
            doc.labels[it.key()] = it.value().get<int>();
    std::vector<int> ground;
    for (const auto& x : j["ground"]) ground.push_back(detail::doc_value(x, doc.labels));
    std::vector<Hyperedge> edges;
    for (const auto& e : j["edges"]) {
        Hyperedge edge;
        for (const auto& x : e) edge.push_back(detail::doc_value(x, doc.labels));
        edges.push_back(std::move(edge));
    }
    doc.hypergraph = make_hypergraph(std::move(ground), std::move(edges));
    return doc;
}

inline HypergraphDocument parse_hypergraph_document(const std::string& text) {
    return parse_hypergraph_document(json::parse(text));
}

inline json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["ground"] = h.ground;
    j["edges"] = h.edges;
    return j;
}

// canonical byte form: sorted keys, two-space indent, single trailing newline
inline std::string serialize(const json& j) { return j.dump(2) + "\n"; }

inline std::string serialize_hypergraph(const Hypergraph& h) {
    return serialize(hypergraph_to_json(h));
}

// ---------------------------------------------------------------------------
// graph documents:
// {"vertices":p,"edges":[[u,v],...],"vertex_colors":{"0":c,...},
//  "edge_colors":{"0-1":c,...},"bipartition":[[...],[...]]}
// Colors are integers (total colorings) or arrays (set colorings).

inline std::pair<int, int> parse_edge_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("edge color key must look like 'u-v'");
    return {std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))};
}

inline std::string edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return std::to_string(u) + "-" + std::to_string(v);
}

inline Graph parse_graph_part(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph document needs 'vertices' and 'edges'");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph edges must be pairs");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(j["vertices"].get<int>(), std::move(es));
}

inline TotalColoring parse_total_coloring(const json& j) {
    TotalColoring c;
    c.graph = parse_graph_part(j);
    if (j.contains("vertex_colors"))
        for (auto it = j["vertex_colors"].begin(); it != j["vertex_colors"].end(); ++it)
            c.vertex_colors[std::stoi(it.key())] = it.value().get<int>();
    if (j.contains("edge_colors"))
        for (auto it = j["edge_colors"].begin(); it != j["edge_colors"].end(); ++it) {
            auto [u, v] = parse_edge_key(it.key());
            if (u > v) std::swap(u, v);
            c.edge_colors[{u, v}] = it.value().get<int>();
        }
    if (j.contains("bipartition")) {
        c.bipartition = std::make_pair(j["bipartition"][0].get<std::vector<int>>(),
                                       j["bipartition"][1].get<std::vector<int>>());
    }
    return c;
}

inline SetColoredGraph parse_set_colored_graph(const json& j) {
    SetColoredGraph g;
    g.graph = parse_graph_part(j);
    g.vertex_labels.resize(static_cast<std::size_t>(g.graph.n));
    if (j.contains("vertex_colors"))
        for (auto it = j["vertex_colors"].begin(); it != j["vertex_colors"].end(); ++it)
            g.vertex_labels[static_cast<std::size_t>(std::stoi(it.key()))] =
                make_edge(it.value().get<std::vector<int>>());
    if (j.contains("edge_colors")) {
        std::map<std::pair<int, int>, Hyperedge> el;
        for (auto it = j["edge_colors"].begin(); it != j["edge_colors"].end(); ++it) {
            auto [u, v] = parse_edge_key(it.key());
            if (u > v) std::swap(u, v);
            el[{u, v}] = make_edge(it.value().get<std::vector<int>>());
        }
        g.edge_labels = std::move(el);
    }
    return g;
}

inline bool looks_set_colored(const json& j) {
    if (j.contains("vertex_colors"))
        for (auto it = j["vertex_colors"].begin(); it != j["vertex_colors"].end(); ++it)
            return it.value().is_array();
    return false;
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline json set_colored_graph_to_json(const SetColoredGraph& g) {
    json j = graph_to_json(g.graph);
    json vc;
    for (int v = 0; v < g.graph.n; ++v)
        vc[std::to_string(v)] = g.vertex_labels[static_cast<std::size_t>(v)];
    j["vertex_colors"] = std::move(vc);
    if (g.edge_labels) {
        json ec;
        for (const auto& [e, l] : *g.edge_labels) ec[edge_key(e.first, e.second)] = l;
        j["edge_colors"] = std::move(ec);
    }
    return j;
}

// ---------------------------------------------------------------------------
// DOT export: undirected, stable names v<i>, set labels rendered {a,b,c}

inline std::string set_label_text(const Hyperedge& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

inline std::string to_dot(const SetColoredGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.graph.n; ++v)
        out << "  v" << v << " [label=\"" << set_label_text(g.vertex_labels[static_cast<std::size_t>(v)])
            << "\"];\n";
    for (auto [u, v] : g.graph.edges) {
        out << "  v" << u << " -- v" << v;
        if (g.edge_labels) out << " [label=\"" << set_label_text(edge_label(g, u, v)) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hypertopo
