#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypertopo/core.hpp"
#include "hypertopo/graph.hpp"

namespace hypertopo {

struct SetColoredGraph {
    Graph graph;
    std::vector<Hyperedge> vertex_labels;                       // one per vertex
    std::optional<std::map<std::pair<int, int>, Hyperedge>> edge_labels;
};

inline const Hyperedge& edge_label(const SetColoredGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    return g.edge_labels->at({u, v});
}

// ---------------------------------------------------------------------------
// builder: one vertex per hyperedge, adjacency = nonempty intersection,
// edge label = the intersection itself

inline SetColoredGraph build_v_intersected(const Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    std::vector<std::pair<int, int>> es;
    std::map<std::pair<int, int>, Hyperedge> labels;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Hyperedge cap = edge_intersection(h.edges[static_cast<std::size_t>(i)],
                                              h.edges[static_cast<std::size_t>(j)]);
            if (!cap.empty()) {
                es.emplace_back(i, j);
                labels[{i, j}] = std::move(cap);
            }
        }
    SetColoredGraph out;
    out.graph = make_graph(m, std::move(es));
    out.vertex_labels = h.edges;
    out.edge_labels = std::move(labels);
    return out;
}

// ---------------------------------------------------------------------------
// ve-verification

struct VeWitness {
    int u = -1, v = -1;
    std::string reason;
};

struct VeReport {
    bool endpoint_labels_distinct = true;
    bool containment = true;      // F(uv) contains F(u) n F(v), nonempty
    bool labels_in_family = true;
    bool family_covered = true;   // every hyperedge occurs as a label
    bool converse = true;         // intersecting vertex labels are adjacent
    std::vector<VeWitness> witnesses;
    bool pass() const {
        return endpoint_labels_distinct && containment && labels_in_family &&
               family_covered && converse;
    }
};

inline VeReport verify_ve_intersected(const SetColoredGraph& g, const Hypergraph& h,
                                      bool allow_equal_endpoint_labels = false) {
    if (!g.edge_labels)
        throw std::invalid_argument("verify_ve_intersected: edge labels missing");
    VeReport r;
    auto in_family = [&](const Hyperedge& e) {
        return std::binary_search(h.edges.begin(), h.edges.end(), e);
    };

    for (auto [u, v] : g.graph.edges) {
        const auto& fu = g.vertex_labels[static_cast<std::size_t>(u)];
        const auto& fv = g.vertex_labels[static_cast<std::size_t>(v)];
        const auto& fe = edge_label(g, u, v);
        if (!allow_equal_endpoint_labels && fu == fv) {
            r.endpoint_labels_distinct = false;
            r.witnesses.push_back({u, v, "equal endpoint labels"});
        }
        Hyperedge cap = edge_intersection(fu, fv);
        if (cap.empty() || !edge_subset(cap, fe)) {
            r.containment = false;
            r.witnesses.push_back({u, v, "edge label does not contain the endpoint intersection"});
        }
    }

    std::vector<const Hyperedge*> all_labels;
    for (const auto& l : g.vertex_labels) all_labels.push_back(&l);
    for (const auto& [k, l] : *g.edge_labels) all_labels.push_back(&l);
    for (const Hyperedge* l : all_labels)
        if (!in_family(*l)) {
            r.labels_in_family = false;
            r.witnesses.push_back({-1, -1, "label outside the hyperedge set"});
            break;
        }
    for (const auto& e : h.edges) {
        bool found = false;
        for (const Hyperedge* l : all_labels)
            if (*l == e) { found = true; break; }
        if (!found) {
            r.family_covered = false;
            r.witnesses.push_back({-1, -1, "hyperedge never used as a label"});
            break;
        }
    }

    const int n = g.graph.n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (has_edge(g.graph, u, v)) continue;
            if (edges_intersect(g.vertex_labels[static_cast<std::size_t>(u)],
                                g.vertex_labels[static_cast<std::size_t>(v)])) {
                r.converse = false;
                r.witnesses.push_back({u, v, "intersecting vertex labels without an edge"});
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// connectivity

struct HyperConnectivity {
    int connectivity = 0;
    std::vector<int> cut_indices;
    HyperedgeSet cut_set;
    bool connected = true;
    std::vector<int> components;  // per-hyperedge component id when disconnected
};

inline HyperConnectivity hyperedge_connectivity(const Hypergraph& h) {
    if (h.edges.size() > 64)
        throw std::invalid_argument("hyperedge_connectivity: more than 64 hyperedges");
    SetColoredGraph g = build_v_intersected(h);
    HyperConnectivity out;
    if (!is_connected(g.graph)) {
        out.connected = false;
        out.connectivity = 0;
        out.components = component_ids(g.graph);
        return out;
    }
    VertexCut cut = min_vertex_cut(g.graph);
    out.connectivity = cut.connectivity;
    out.cut_indices = cut.cut;
    for (int i : cut.cut) out.cut_set.push_back(h.edges[static_cast<std::size_t>(i)]);
    return out;
}

// ---------------------------------------------------------------------------
// metrics: hyperedge degrees, hyperdiameter, minimum dominating set

struct IntersectedMetrics {
    std::vector<int> hyperedge_degrees;      // canonical edge order
    std::optional<int> hyperdiameter;        // absent when disconnected
    std::vector<int> dominating_indices;
    HyperedgeSet dominating_set;
    bool connected = true;
    std::vector<int> components;
};

inline IntersectedMetrics intersected_metrics(const Hypergraph& h) {
    if (h.edges.size() > 64)
        throw std::invalid_argument("intersected_metrics: more than 64 hyperedges");
    SetColoredGraph g = build_v_intersected(h);
    IntersectedMetrics out;
    const int m = g.graph.n;
    for (int i = 0; i < m; ++i) out.hyperedge_degrees.push_back(degree(g.graph, i));
    out.connected = is_connected(g.graph);
    out.components = component_ids(g.graph);
    out.hyperdiameter = diameter(g.graph);

    // smallest subset whose outside edges all meet it, canonical-first
    auto adj = adjacency(g.graph);
    for (int size = 0; size <= m && out.dominating_indices.empty() && m > 0; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        auto dominated = [&]() {
            std::vector<bool> in(static_cast<std::size_t>(m), false);
            for (int v : pick) in[static_cast<std::size_t>(v)] = true;
            for (int v = 0; v < m; ++v) {
                if (in[static_cast<std::size_t>(v)]) continue;
                bool hit = false;
                for (int w : adj[static_cast<std::size_t>(v)])
                    if (in[static_cast<std::size_t>(w)]) { hit = true; break; }
                if (!hit) return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int start, int depth) -> bool {
            if (depth == size) return dominated();
            for (int v = start; v < m; ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                if (self(self, v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (size > 0 && rec(rec, 0, 0)) out.dominating_indices = pick;
    }
    for (int i : out.dominating_indices)
        out.dominating_set.push_back(h.edges[static_cast<std::size_t>(i)]);
    return out;
}

// ---------------------------------------------------------------------------
// proper hyperedge-hamiltonian cycle

struct HyperCycle {
    std::vector<int> edge_order;       // cyclic order of hyperedge indices
    std::vector<int> representatives;  // representatives[t] lies in order[t] n order[t+1]
};

inline bool recheck_cycle(const Hypergraph& h, const HyperCycle& c) {
    const int n = static_cast<int>(h.edges.size());
    if (static_cast<int>(c.edge_order.size()) != n ||
        static_cast<int>(c.representatives.size()) != n)
        return false;
    std::vector<int> seen;
    for (int t = 0; t < n; ++t) {
        const auto& a = h.edges[static_cast<std::size_t>(c.edge_order[static_cast<std::size_t>(t)])];
        const auto& b = h.edges[static_cast<std::size_t>(c.edge_order[static_cast<std::size_t>((t + 1) % n)])];
        int x = c.representatives[static_cast<std::size_t>(t)];
        if (!edge_contains(a, x) || !edge_contains(b, x)) return false;
        seen.push_back(x);
    }
    return make_edge(std::move(seen)) == h.ground;
}

inline std::optional<HyperCycle> find_proper_hamiltonian_cycle(const Hypergraph& h) {
    const int n = static_cast<int>(h.edges.size());
    if (n != static_cast<int>(h.ground.size()))
        throw std::invalid_argument("find_proper_hamiltonian_cycle: needs |edges| == |ground|");
    if (n > 12)
        throw std::invalid_argument("find_proper_hamiltonian_cycle: more than 12 hyperedges");
    if (n == 0) return std::nullopt;
    if (n == 1) {
        if (h.ground.size() == 1 && edge_contains(h.edges[0], h.ground[0]))
            return HyperCycle{{0}, {h.ground[0]}};
        return std::nullopt;
    }

    std::vector<int> order{0};
    std::vector<bool> used_edge(static_cast<std::size_t>(n), false);
    used_edge[0] = true;
    HyperCycle found;
    std::vector<int> reps;
    std::vector<bool> used_vertex_val;  // indexed by ground position
    used_vertex_val.assign(h.ground.size(), false);

    auto vertex_pos = [&](int x) {
        return static_cast<std::size_t>(
            std::lower_bound(h.ground.begin(), h.ground.end(), x) - h.ground.begin());
    };

    // choose representatives smallest-first for a closed candidate order
    auto assign_reps = [&](auto&& self, int t) -> bool {
        if (t == n) return true;
        const auto& a = h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
        const auto& b = h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>((t + 1) % n)])];
        for (int x : edge_intersection(a, b)) {
            auto p = vertex_pos(x);
            if (used_vertex_val[p]) continue;
            used_vertex_val[p] = true;
            reps.push_back(x);
            if (self(self, t + 1)) return true;
            reps.pop_back();
            used_vertex_val[p] = false;
        }
        return false;
    };

    auto search = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) {
            if (!edges_intersect(h.edges[static_cast<std::size_t>(order.back())], h.edges[0]))
                return false;
            reps.clear();
            std::fill(used_vertex_val.begin(), used_vertex_val.end(), false);
            if (assign_reps(assign_reps, 0)) {
                found.edge_order = order;
                found.representatives = reps;
                return true;
            }
            return false;
        }
        const auto& prev = h.edges[static_cast<std::size_t>(order.back())];
        for (int i = 1; i < n; ++i) {
            if (used_edge[static_cast<std::size_t>(i)]) continue;
            if (!edges_intersect(prev, h.edges[static_cast<std::size_t>(i)])) continue;
            used_edge[static_cast<std::size_t>(i)] = true;
            order.push_back(i);
            if (self(self)) return true;
            order.pop_back();
            used_edge[static_cast<std::size_t>(i)] = false;
        }
        return false;
    };
    if (search(search)) return found;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// k-uniform hyperedge-hamiltonian cycle check

struct UniformCycleReport {
    bool is_permutation = true;
    bool consecutive_size = true;   // every consecutive intersection has size k-1
    std::optional<std::pair<int, int>> size_witness;
    bool vertex_counts = true;      // every vertex lies in exactly k-1 consecutive intersections
    std::optional<int> count_witness;
    bool pass() const { return is_permutation && consecutive_size && vertex_counts; }
};

inline UniformCycleReport verify_uniform_cycle(const Hypergraph& h, const std::vector<int>& order) {
    StructureReport sr = structure_report(h);
    if (!sr.uniform_k)
        throw std::invalid_argument("verify_uniform_cycle: input is not uniform");
    const int k = *sr.uniform_k;
    const int n = static_cast<int>(h.edges.size());
    UniformCycleReport r;

    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(n));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) {
        r.is_permutation = false;
        return r;
    }

    std::map<int, int> appearances;
    for (int t = 0; t < n; ++t) {
        const auto& a = h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
        const auto& b = h.edges[static_cast<std::size_t>(order[static_cast<std::size_t>((t + 1) % n)])];
        Hyperedge cap = edge_intersection(a, b);
        if (static_cast<int>(cap.size()) != k - 1) {
            r.consecutive_size = false;
            if (!r.size_witness)
                r.size_witness = std::make_pair(order[static_cast<std::size_t>(t)],
                                                order[static_cast<std::size_t>((t + 1) % n)]);
        }
        for (int x : cap) ++appearances[x];
    }
    for (int x : h.ground)
        if (appearances[x] != k - 1) {
            r.vertex_counts = false;
            if (!r.count_witness) r.count_witness = x;
        }
    return r;
}

// ---------------------------------------------------------------------------
// constructive set-coloring of an arbitrary connected graph

inline std::pair<Hypergraph, SetColoredGraph> induce_3i_coloring(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("induce_3i_coloring: graph disconnected");
    if (g.n > 200) throw std::invalid_argument("induce_3i_coloring: more than 200 vertices");

    // peel leaves of a spanning tree, highest index first
    std::vector<int> removal;
    {
        std::vector<bool> alive(static_cast<std::size_t>(g.n), true);
        std::vector<std::pair<int, int>> tree;
        auto adj = adjacency(g);
        std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
        std::vector<int> stack{0};
        std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
        seen[0] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    parent[static_cast<std::size_t>(v)] = u;
                    tree.emplace_back(std::min(u, v), std::max(u, v));
                    stack.push_back(v);
                }
        }
        Graph t = make_graph(g.n, tree);
        std::vector<bool> removed(static_cast<std::size_t>(g.n), false);
        for (int step = 0; step + 1 < g.n; ++step) {
            auto tadj = adjacency(t);
            int leaf = -1;
            for (int v = g.n - 1; v >= 0; --v) {
                if (removed[static_cast<std::size_t>(v)]) continue;
                int d = 0;
                for (int w : tadj[static_cast<std::size_t>(v)])
                    if (!removed[static_cast<std::size_t>(w)]) ++d;
                if (d <= 1) { leaf = v; break; }
            }
            removal.push_back(leaf);
            removed[static_cast<std::size_t>(leaf)] = true;
        }
    }

    std::vector<Hyperedge> labels(static_cast<std::size_t>(g.n));
    std::vector<bool> present(static_cast<std::size_t>(g.n), false);
    int root = -1;
    for (int v = 0; v < g.n; ++v) {
        bool inrem = false;
        for (int r : removal)
            if (r == v) inrem = true;
        if (!inrem) root = v;
    }
    labels[static_cast<std::size_t>(root)] = {1};
    present[static_cast<std::size_t>(root)] = true;
    int max_label = 1;

    std::map<std::pair<int, int>, Hyperedge> edge_labels;
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        int x = *it;
        std::vector<int> nbs;
        for (int y : neighbors(g, x))
            if (present[static_cast<std::size_t>(y)]) nbs.push_back(y);
        Hyperedge fx;
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            int fresh = max_label + 1 + static_cast<int>(i);
            fx.push_back(fresh);
            labels[static_cast<std::size_t>(nbs[i])].push_back(fresh);
            labels[static_cast<std::size_t>(nbs[i])] =
                make_edge(std::move(labels[static_cast<std::size_t>(nbs[i])]));
            int a = std::min(x, nbs[i]), b = std::max(x, nbs[i]);
            edge_labels[{a, b}] = Hyperedge{fresh};
        }
        labels[static_cast<std::size_t>(x)] = fx;
        max_label += static_cast<int>(nbs.size());
        present[static_cast<std::size_t>(x)] = true;
    }

    std::vector<Hyperedge> all = labels;
    for (const auto& [k, l] : edge_labels) all.push_back(l);
    Hypergraph h = make_hypergraph(interval(1, max_label), all);

    SetColoredGraph out;
    out.graph = g;
    out.vertex_labels = labels;
    out.edge_labels = std::move(edge_labels);
    return {std::move(h), std::move(out)};
}

// ---------------------------------------------------------------------------
// tree realization: hyperedge set whose intersection graph is the given tree

inline Hypergraph grow_tree_hyperedge_set(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("grow_tree_hyperedge_set: input is not a tree");

    std::vector<int> removal;
    std::vector<bool> removed(static_cast<std::size_t>(t.n), false);
    for (int step = 0; step + 1 < t.n; ++step) {
        auto adj = adjacency(t);
        int leaf = -1;
        for (int v = t.n - 1; v >= 0; --v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            int d = 0;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!removed[static_cast<std::size_t>(w)]) ++d;
            if (d <= 1) { leaf = v; break; }
        }
        removal.push_back(leaf);
        removed[static_cast<std::size_t>(leaf)] = true;
    }
    int root = -1;
    for (int v = 0; v < t.n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) root = v;

    std::vector<Hyperedge> labels(static_cast<std::size_t>(t.n));
    std::vector<bool> present(static_cast<std::size_t>(t.n), false);
    labels[static_cast<std::size_t>(root)] = {1};
    present[static_cast<std::size_t>(root)] = true;
    int n_max = 1;
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        int u = *it;
        int v = -1;  // the unique attached neighbor
        for (int w : neighbors(t, u))
            if (present[static_cast<std::size_t>(w)]) v = w;
        ++n_max;
        labels[static_cast<std::size_t>(u)] = {n_max};
        labels[static_cast<std::size_t>(v)].push_back(n_max);
        labels[static_cast<std::size_t>(v)] = make_edge(std::move(labels[static_cast<std::size_t>(v)]));
        present[static_cast<std::size_t>(u)] = true;
    }
    return make_hypergraph(interval(1, n_max), labels);
}

// ---------------------------------------------------------------------------
// doubling: copy, join u-u', and cross-join along every original edge

inline SetColoredGraph double_graph(const SetColoredGraph& g, const Hypergraph& h) {
    VeReport pre = verify_ve_intersected(g, h, /*allow_equal_endpoint_labels=*/true);
    if (!pre.pass())
        throw std::invalid_argument("double_graph: input does not verify against its hypergraph");
    const int n = g.graph.n;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.graph.edges) {
        es.emplace_back(u, v);                // original
        es.emplace_back(u + n, v + n);        // copy
        es.emplace_back(u, v + n);            // cross
        es.emplace_back(v, u + n);
    }
    for (int u = 0; u < n; ++u) es.emplace_back(u, u + n);

    SetColoredGraph out;
    out.graph = make_graph(2 * n, std::move(es));
    out.vertex_labels.resize(static_cast<std::size_t>(2 * n));
    for (int u = 0; u < n; ++u) {
        out.vertex_labels[static_cast<std::size_t>(u)] = g.vertex_labels[static_cast<std::size_t>(u)];
        out.vertex_labels[static_cast<std::size_t>(u + n)] = g.vertex_labels[static_cast<std::size_t>(u)];
    }
    std::map<std::pair<int, int>, Hyperedge> labels;
    for (auto [u, v] : out.graph.edges)
        labels[{u, v}] = edge_intersection(out.vertex_labels[static_cast<std::size_t>(u)],
                                           out.vertex_labels[static_cast<std::size_t>(v)]);
    out.edge_labels = std::move(labels);
    return out;
}

// ---------------------------------------------------------------------------
// hyperedge surgery

inline Hypergraph hyperedge_coincide(const Hypergraph& h, int i, int j) {
    const int m = static_cast<int>(h.edges.size());
    if (i < 0 || j < 0 || i >= m || j >= m || i == j)
        throw std::out_of_range("hyperedge_coincide: bad indices");
    HyperedgeSet next;
    for (int t = 0; t < m; ++t)
        if (t != i && t != j) next.push_back(h.edges[static_cast<std::size_t>(t)]);
    next.push_back(edge_union(h.edges[static_cast<std::size_t>(i)], h.edges[static_cast<std::size_t>(j)]));
    return make_hypergraph(h.ground, std::move(next));
}

struct SplitResult {
    Hypergraph result;
    int duplicates_merged = 0;
};

inline SplitResult hyperedge_split(const Hypergraph& h, int i,
                                   const std::pair<Hyperedge, Hyperedge>& part) {
    const int m = static_cast<int>(h.edges.size());
    if (i < 0 || i >= m) throw std::out_of_range("hyperedge_split: bad index");
    Hyperedge a = make_edge(part.first), b = make_edge(part.second);
    if (a.empty() || b.empty())
        throw std::invalid_argument("hyperedge_split: parts must be nonempty");
    if (edge_union(a, b) != h.edges[static_cast<std::size_t>(i)])
        throw std::invalid_argument("hyperedge_split: parts must cover the hyperedge");
    std::vector<Hyperedge> next;
    for (int t = 0; t < m; ++t)
        if (t != i) next.push_back(h.edges[static_cast<std::size_t>(t)]);
    next.push_back(a);
    next.push_back(b);
    const int raw = static_cast<int>(next.size());
    Hypergraph out = make_hypergraph(h.ground, std::move(next));
    const int merged = raw - static_cast<int>(out.edges.size());
    return SplitResult{std::move(out), merged};
}

// ---------------------------------------------------------------------------
// hypergraph isomorphism over ground-set bijections (|ground| <= 8)

inline std::optional<std::vector<int>> hypergraph_isomorphic(const Hypergraph& a,
                                                             const Hypergraph& b) {
    if (a.ground.size() != b.ground.size()) return std::nullopt;
    if (a.edges.size() != b.edges.size()) return std::nullopt;
    if (a.ground.size() > 8)
        throw std::invalid_argument("hypergraph_isomorphic: ground set larger than 8");
    std::vector<int> image = b.ground;
    std::sort(image.begin(), image.end());
    do {
        HyperedgeSet mapped;
        for (const auto& e : a.edges) {
            Hyperedge img;
            for (int v : e) {
                auto pos = std::lower_bound(a.ground.begin(), a.ground.end(), v) - a.ground.begin();
                img.push_back(image[static_cast<std::size_t>(pos)]);
            }
            mapped.push_back(make_edge(std::move(img)));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b.edges) return image;
    } while (std::next_permutation(image.begin(), image.end()));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// colored homomorphism check

enum class SetOp { Intersection, Union };

struct HomReport {
    bool edges_preserved = true;
    bool labels_consistent = true;  // the [op] relation transfers along the map
    std::optional<std::pair<int, int>> witness;
    bool pass() const { return edges_preserved && labels_consistent; }
};

inline HomReport check_colored_homomorphism(const SetColoredGraph& ga, const SetColoredGraph& gb,
                                            const std::vector<int>& f, SetOp op) {
    if (static_cast<int>(f.size()) != ga.graph.n)
        throw std::invalid_argument("check_colored_homomorphism: map must cover every vertex");
    for (int x : f)
        if (x < 0 || x >= gb.graph.n)
            throw std::invalid_argument("check_colored_homomorphism: map image out of range");
    HomReport r;
    auto apply = [&](const Hyperedge& x, const Hyperedge& y) {
        return op == SetOp::Intersection ? edge_intersection(x, y) : edge_union(x, y);
    };
    for (auto [u, v] : ga.graph.edges) {
        int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
        if (fu == fv) {
            // contracted edge: only label-consistent collapses are homomorphic
            if (ga.vertex_labels[static_cast<std::size_t>(u)] !=
                ga.vertex_labels[static_cast<std::size_t>(v)]) {
                r.edges_preserved = false;
                if (!r.witness) r.witness = std::make_pair(u, v);
            }
            continue;
        }
        if (!has_edge(gb.graph, fu, fv)) {
            r.edges_preserved = false;
            if (!r.witness) r.witness = std::make_pair(u, v);
            continue;
        }
        if (ga.edge_labels && gb.edge_labels) {
            bool rel_a = edge_label(ga, u, v) ==
                         apply(ga.vertex_labels[static_cast<std::size_t>(u)],
                               ga.vertex_labels[static_cast<std::size_t>(v)]);
            bool rel_b = edge_label(gb, fu, fv) ==
                         apply(gb.vertex_labels[static_cast<std::size_t>(fu)],
                               gb.vertex_labels[static_cast<std::size_t>(fv)]);
            if (rel_a != rel_b) {
                r.labels_consistent = false;
                if (!r.witness) r.witness = std::make_pair(u, v);
            }
        }
    }
    return r;
}

}  // namespace hypertopo
