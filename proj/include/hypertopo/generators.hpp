#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypertopo/core.hpp"
#include "hypertopo/groups.hpp"

namespace hypertopo {

// strong families over [1,m]: for t >= 2 every edge is [k,t] plus a k-subset
// of [t+1,m]; the t = 1 family follows the listed form with the long edge [2,m]
inline Hypergraph strong_hyperedge_set(int m, int t) {
    if (m < 3 || t < 1 || t > m - 1)
        throw std::invalid_argument("strong_hyperedge_set: need m >= 3 and 1 <= t <= m-1");
    if (m > 16) throw std::invalid_argument("strong_hyperedge_set: m larger than 16");
    std::vector<Hyperedge> edges;
    if (t == 1) {
        for (int a = 2; a <= m; ++a) edges.push_back({1, a});
        edges.push_back(interval(2, m));
    } else {
        for (int k = 1; k <= t; ++k) {
            std::vector<int> tail = interval(t + 1, m);
            if (static_cast<int>(tail.size()) < k) continue;
            std::vector<int> idx(static_cast<std::size_t>(k));
            auto rec = [&](auto&& self, int start, int depth) -> void {
                if (depth == k) {
                    Hyperedge e = interval(k, t);
                    for (int d = 0; d < k; ++d) e.push_back(tail[static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])]);
                    edges.push_back(make_edge(std::move(e)));
                    return;
                }
                for (int i = start; i < static_cast<int>(tail.size()); ++i) {
                    idx[static_cast<std::size_t>(depth)] = i;
                    self(self, i + 1, depth + 1);
                }
            };
            rec(rec, 0, 0);
        }
    }
    return make_hypergraph_on(m, std::move(edges));
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long strong_set_cardinality(int m, int t) {
    if (t == 1) return m;
    long long s = 0;
    for (int k = 1; k <= t; ++k) s += binomial(m - t, k);
    return s;
}

// n hyperedges of k consecutive residues over [1,n]
inline Hypergraph cyclic_k_uniform(int n, int k) {
    if (k < 2 || k > n - 1) throw std::invalid_argument("cyclic_k_uniform: need 2 <= k <= n-1");
    if (n > 64) throw std::invalid_argument("cyclic_k_uniform: n larger than 64");
    std::vector<Hyperedge> edges;
    for (int j = 0; j < n; ++j) {
        Hyperedge e;
        for (int s = 1; s <= k; ++s) e.push_back(mod1(j + s, n));
        edges.push_back(make_edge(std::move(e)));
    }
    return make_hypergraph_on(n, std::move(edges));
}

// canonical indices of the k-windows in their natural cyclic order
inline std::vector<int> window_order(const Hypergraph& h, int n, int k) {
    std::vector<int> order;
    for (int j = 0; j < n; ++j) {
        Hyperedge e;
        for (int s = 1; s <= k; ++s) e.push_back(mod1(j + s, n));
        e = make_edge(std::move(e));
        auto it = std::lower_bound(h.edges.begin(), h.edges.end(), e);
        order.push_back(static_cast<int>(it - h.edges.begin()));
    }
    return order;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of families over [1,n]; strict demands all three of
// Independence / Intersection / Integrity, loose mode waives Independence

namespace detail {

struct ThreeIFlags {
    bool independence = true, intersection = true, integrity = true;
};

inline ThreeIFlags quick_3i(const std::vector<int>& ground, const HyperedgeSet& es) {
    ThreeIFlags f;
    for (std::size_t i = 0; i < es.size() && f.independence; ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            if (i != j && es[i].size() < es[j].size() && edge_subset(es[i], es[j])) {
                f.independence = false;
                break;
            }
    if (es.size() == 1) {
        f.intersection = es[0] == ground;
    } else if (es.empty()) {
        f.intersection = false;
    } else {
        for (const auto& e : es) {
            bool met = false;
            for (const auto& g : es)
                if (&e != &g && edges_intersect(e, g)) { met = true; break; }
            if (!met) { f.intersection = false; break; }
        }
    }
    Hyperedge cover;
    for (const auto& e : es) cover = edge_union(cover, e);
    f.integrity = cover == ground;
    return f;
}

}  // namespace detail

inline std::vector<Hypergraph> enumerate_3i(int n, bool strict = true) {
    if (n > 4) throw std::length_error("enumerate_3i: ground set larger than 4");
    if (n < 1) throw std::invalid_argument("enumerate_3i: empty ground set");
    std::vector<int> ground = interval(1, n);
    HyperedgeSet subsets = power_set(ground);
    std::vector<Hypergraph> out;
    HyperedgeSet current;

    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!current.empty()) {
            auto f = detail::quick_3i(ground, current);
            if ((!strict || f.independence) && f.intersection && f.integrity)
                out.push_back(Hypergraph{ground, current});
        }
        for (std::size_t i = start; i < subsets.size(); ++i) {
            if (strict) {
                bool nested = false;  // containment never repairs itself later
                for (const auto& e : current)
                    if (edge_subset(e, subsets[i]) || edge_subset(subsets[i], e)) {
                        nested = true;
                        break;
                    }
                if (nested) continue;
            }
            current.push_back(subsets[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// key matchings: pairs (E, co-E) with both sides strict 3I

inline std::vector<std::pair<Hypergraph, Hypergraph>> key_matchings(int n, int limit,
                                                                    unsigned seed) {
    if (n > 10) throw std::invalid_argument("key_matchings: ground set larger than 10");
    std::vector<std::pair<Hypergraph, Hypergraph>> out;
    std::vector<int> ground = interval(1, n);

    auto qualifies = [&](const Hypergraph& h, Hypergraph& co) {
        auto f = detail::quick_3i(ground, h.edges);
        if (!(f.independence && f.intersection && f.integrity)) return false;
        for (const auto& e : h.edges)
            if (e == ground) return false;
        co = complement_set(h);
        auto g = detail::quick_3i(ground, co.edges);
        return g.independence && g.intersection && g.integrity;
    };

    if (n <= 4) {
        for (const auto& h : enumerate_3i(n, true)) {
            Hypergraph co;
            if (qualifies(h, co)) {
                out.emplace_back(h, co);
                if (static_cast<int>(out.size()) == limit) break;
            }
        }
        return out;
    }

    std::mt19937 rng(seed);
    HyperedgeSet subsets = power_set(ground);
    std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
    std::uniform_int_distribution<int> count(2, std::max(2, n));
    std::vector<HyperedgeSet> seen;
    const int attempts = 4000 + 1000 * limit;
    for (int a = 0; a < attempts && static_cast<int>(out.size()) < limit; ++a) {
        std::vector<Hyperedge> pickies;
        int c = count(rng);
        for (int i = 0; i < c; ++i) pickies.push_back(subsets[pick(rng)]);
        Hypergraph h;
        try {
            h = make_hypergraph(ground, std::move(pickies));
        } catch (const std::exception&) {
            continue;
        }
        if (std::find(seen.begin(), seen.end(), h.edges) != seen.end()) continue;
        Hypergraph co;
        if (qualifies(h, co)) {
            seen.push_back(h.edges);
            out.emplace_back(std::move(h), std::move(co));
        }
    }
    return out;
}

inline Hypergraph fixed_point_union(const Hypergraph& h) {
    Hypergraph co = complement_set(h);
    std::vector<Hyperedge> both = h.edges;
    for (const auto& e : co.edges) both.push_back(e);
    return make_hypergraph(h.ground, std::move(both));
}

}  // namespace hypertopo
