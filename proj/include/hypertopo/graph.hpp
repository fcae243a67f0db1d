#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypertopo {

// Finite simple graph; edges stored smaller-index-first and sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const Graph&) const = default;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("make_graph: loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("make_graph: vertex index out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

inline bool has_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    return std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
}

inline int degree(const Graph& g, int u) {
    int d = 0;
    for (auto [a, b] : g.edges)
        if (a == u || b == u) ++d;
    return d;
}

inline std::vector<int> neighbors(const Graph& g, int u) {
    std::vector<int> out;
    for (auto [a, b] : g.edges) {
        if (a == u) out.push_back(b);
        if (b == u) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    auto adj = adjacency(g);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto comp = component_ids(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && static_cast<int>(g.edges.size()) == g.n - 1 && is_connected(g);
}

inline std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    auto adj = adjacency(g);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

// diameter of a connected graph; nullopt when disconnected
inline std::optional<int> diameter(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto d = bfs_distances(g, s);
        for (int x : d) {
            if (x == -1) return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

// 2-coloring; nullopt when an odd cycle exists
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n), -1);
    auto adj = adjacency(g);
    for (int s = 0; s < g.n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> x, y;
    for (int i = 0; i < g.n; ++i)
        (side[static_cast<std::size_t>(i)] == 0 ? x : y).push_back(i);
    return std::make_pair(std::move(x), std::move(y));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return make_graph(n, std::move(es));
}

inline Graph complete_bipartite_graph(int m, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
    return make_graph(m + n, std::move(es));
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    if (n >= 3) es.emplace_back(0, n - 1);
    return make_graph(n, std::move(es));
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(es));
}

// ---------------------------------------------------------------------------
// isomorphism (backtracking, degree-pruned)

inline std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
    const int n = a.n;
    std::vector<int> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        da[static_cast<std::size_t>(i)] = degree(a, i);
        db[static_cast<std::size_t>(i)] = degree(b, i);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    auto adja = adjacency(a);
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            if (da[static_cast<std::size_t>(u)] != db[static_cast<std::size_t>(t)]) continue;
            bool ok = true;
            for (int w : adja[static_cast<std::size_t>(u)]) {
                if (w < u && !has_edge(b, map[static_cast<std::size_t>(w)], t)) { ok = false; break; }
            }
            if (ok) {
                // mapped non-neighbors must stay non-adjacent
                for (int w = 0; w < u && ok; ++w)
                    if (!has_edge(a, w, u) && has_edge(b, map[static_cast<std::size_t>(w)], t)) ok = false;
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = t;
            used[static_cast<std::size_t>(t)] = true;
            if (self(self, u + 1)) return true;
            used[static_cast<std::size_t>(t)] = false;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// exact chromatic number (backtracking; greedy bound first)

namespace detail {

inline bool k_colorable(const std::vector<std::vector<int>>& adj, int n, int k,
                        std::vector<int>& color) {
    auto rec = [&](auto&& self, int u, int maxused) -> bool {
        if (u == n) return true;
        int limit = std::min(k, maxused + 1);  // new color classes in order
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int v : adj[static_cast<std::size_t>(u)])
                if (v < u && color[static_cast<std::size_t>(v)] == c) { ok = false; break; }
            if (!ok) continue;
            color[static_cast<std::size_t>(u)] = c;
            if (self(self, u + 1, std::max(maxused, c + 1))) return true;
        }
        color[static_cast<std::size_t>(u)] = -1;
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    if (g.edges.empty()) return 1;
    auto adj = adjacency(g);
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    for (int k = 1; k <= g.n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (detail::k_colorable(adj, g.n, k, color)) return k;
    }
    return g.n;
}

inline int greedy_coloring_bound(const Graph& g) {
    if (g.n == 0) return 0;
    auto adj = adjacency(g);
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    int used = 0;
    for (int u : order) {
        std::vector<bool> taken(static_cast<std::size_t>(g.n), false);
        for (int v : adj[static_cast<std::size_t>(u)])
            if (color[static_cast<std::size_t>(v)] >= 0) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = true;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(u)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// ---------------------------------------------------------------------------
// minimum vertex cut

struct VertexCut {
    int connectivity = 0;
    std::vector<int> cut;  // vertex indices, empty when already disconnected
    bool connected_input = true;
};

namespace detail {

inline bool disconnects(const Graph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(static_cast<std::size_t>(g.n), false);
    for (int v : removed) gone[static_cast<std::size_t>(v)] = true;
    int start = -1, alive = 0;
    for (int v = 0; v < g.n; ++v)
        if (!gone[static_cast<std::size_t>(v)]) {
            ++alive;
            if (start == -1) start = v;
        }
    if (alive <= 1) return true;  // reduced to (at most) a single vertex
    auto adj = adjacency(g);
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!gone[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt != alive;
}

// unit-capacity vertex connectivity between two non-adjacent vertices via
// augmenting paths on the split graph
inline int st_vertex_connectivity(const Graph& g, int s, int t, std::vector<int>* cut_out) {
    const int n = g.n;
    const int N = 2 * n;  // v_in = v, v_out = v + n
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
    const int INF = 1 << 20;
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(v + n)] = (v == s || v == t) ? INF : 1;
    for (auto [u, v] : g.edges) {
        cap[static_cast<std::size_t>(u + n)][static_cast<std::size_t>(v)] = INF;
        cap[static_cast<std::size_t>(v + n)][static_cast<std::size_t>(u)] = INF;
    }
    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<std::size_t>(N), -1);
        std::queue<int> q;
        q.push(s + n);
        prev[static_cast<std::size_t>(s + n)] = s + n;
        while (!q.empty() && prev[static_cast<std::size_t>(t)] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < N; ++v)
                if (prev[static_cast<std::size_t>(v)] == -1 && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                    prev[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                }
        }
        if (prev[static_cast<std::size_t>(t)] == -1) break;
        for (int v = t; v != s + n; v = prev[static_cast<std::size_t>(v)]) {
            int u = prev[static_cast<std::size_t>(v)];
            --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
        ++flow;
    }
    if (cut_out) {
        std::vector<bool> reach(static_cast<std::size_t>(N), false);
        std::vector<int> stack{s + n};
        reach[static_cast<std::size_t>(s + n)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < N; ++v)
                if (!reach[static_cast<std::size_t>(v)] && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                    reach[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
        }
        cut_out->clear();
        for (int v = 0; v < n; ++v)
            if (reach[static_cast<std::size_t>(v)] && !reach[static_cast<std::size_t>(v + n)]) cut_out->push_back(v);
    }
    return flow;
}

}  // namespace detail

inline VertexCut min_vertex_cut_exhaustive(const Graph& g) {
    VertexCut out;
    if (!is_connected(g)) {
        out.connected_input = false;
        return out;
    }
    for (int size = 0; size <= g.n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        auto rec = [&](auto&& self, int start, int depth) -> bool {
            if (depth == size) {
                return detail::disconnects(g, pick);
            }
            for (int v = start; v < g.n; ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                if (self(self, v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) {
            out.connectivity = size;
            out.cut = pick;
            return out;
        }
    }
    out.connectivity = g.n;  // unreachable for n >= 1
    return out;
}

inline VertexCut min_vertex_cut_flow(const Graph& g) {
    VertexCut out;
    if (!is_connected(g)) {
        out.connected_input = false;
        return out;
    }
    int best = g.n - 1;
    std::vector<int> best_cut;
    for (int v = 0; v < g.n - 1; ++v) best_cut.push_back(v);
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t) {
            if (has_edge(g, s, t)) continue;
            std::vector<int> cut;
            int k = detail::st_vertex_connectivity(g, s, t, &cut);
            if (k < best) {
                best = k;
                best_cut = cut;
            }
        }
    out.connectivity = best;
    out.cut = best_cut;
    return out;
}

inline VertexCut min_vertex_cut(const Graph& g) {
    if (g.n <= 16) return min_vertex_cut_exhaustive(g);
    return min_vertex_cut_flow(g);
}

}  // namespace hypertopo
