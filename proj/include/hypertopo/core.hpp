#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypertopo {

// A hyperedge is a sorted, duplicate-free vector of non-negative vertex ids.
// A hyperedge set is kept sorted lexicographically and duplicate-free; this
// canonical form makes every enumeration result order-independent.
using Hyperedge = std::vector<int>;
using HyperedgeSet = std::vector<Hyperedge>;

inline Hyperedge make_edge(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

inline HyperedgeSet make_family(std::vector<Hyperedge> edges) {
    for (auto& e : edges) e = make_edge(std::move(e));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

inline bool edge_contains(const Hyperedge& e, int x) {
    return std::binary_search(e.begin(), e.end(), x);
}

inline Hyperedge edge_intersection(const Hyperedge& a, const Hyperedge& b) {
    Hyperedge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Hyperedge edge_union(const Hyperedge& a, const Hyperedge& b) {
    Hyperedge out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Hyperedge edge_difference(const Hyperedge& a, const Hyperedge& b) {
    Hyperedge out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool edge_subset(const Hyperedge& a, const Hyperedge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool edges_intersect(const Hyperedge& a, const Hyperedge& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

// [m, n] as a ground-set / edge value
inline std::vector<int> interval(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

struct Hypergraph {
    std::vector<int> ground;  // strictly increasing, non-negative
    HyperedgeSet edges;

    bool operator==(const Hypergraph&) const = default;
};

inline Hypergraph make_hypergraph(std::vector<int> ground, std::vector<Hyperedge> edges) {
    ground = make_edge(std::move(ground));
    for (int x : ground)
        if (x < 0) throw std::invalid_argument("ground-set elements must be non-negative");
    HyperedgeSet fam = make_family(std::move(edges));
    for (const auto& e : fam) {
        if (e.empty()) throw std::invalid_argument("hyperedges must be nonempty");
        if (!edge_subset(e, ground))
            throw std::invalid_argument("hyperedge not contained in the ground set");
    }
    return Hypergraph{std::move(ground), std::move(fam)};
}

inline Hypergraph make_hypergraph_on(int n, std::vector<Hyperedge> edges) {
    return make_hypergraph(interval(1, n), std::move(edges));
}

inline int hypervertex_degree(const HyperedgeSet& edges, int x) {
    int d = 0;
    for (const auto& e : edges)
        if (edge_contains(e, x)) ++d;
    return d;
}

// ---------------------------------------------------------------------------
// power set

inline HyperedgeSet power_set(const std::vector<int>& ground) {
    if (ground.size() > 20) throw std::length_error("power_set: ground set larger than 20");
    const int n = static_cast<int>(ground.size());
    HyperedgeSet out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Hyperedge e;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) e.push_back(ground[static_cast<std::size_t>(i)]);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// structure report

struct PairWitness {
    Hyperedge a, b;
};

struct StructureReport {
    bool independence = true;                        // no hyperedge strictly inside another
    std::optional<PairWitness> independence_witness;
    bool intersection = true;                        // every hyperedge meets some other one
    std::optional<Hyperedge> intersection_witness;
    bool integrity = true;                           // ground set covered
    std::vector<int> missing_vertices;
    std::optional<int> uniform_k;
    bool equitable = true;
    bool full = true;
    std::vector<int> degree_series;                  // non-decreasing
    long long norm = 0;
    HyperedgeSet ears;
    std::vector<int> isolated;                       // vertices lying in exactly one hyperedge
    bool euler = true;
    std::optional<std::pair<HyperedgeSet, HyperedgeSet>> bipartite_split;
    bool self_complementary = false;
    std::vector<std::vector<int>> perfect_hypermatchings;  // each a sorted list of edge indices
    bool overall = true;                             // per the strict flag passed to verify_3i

    bool pass(bool strict) const {
        return strict ? independence && intersection && integrity
                      : intersection && integrity;
    }
};

namespace detail {

// Intersection with the singleton convention: {ground} passes vacuously,
// any other single-edge family fails.
inline void check_three_i(const Hypergraph& h, StructureReport& r) {
    const auto& es = h.edges;
    for (std::size_t i = 0; i < es.size() && r.independence; ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            if (es[i].size() < es[j].size() && edge_subset(es[i], es[j])) {
                r.independence = false;
                r.independence_witness = PairWitness{es[i], es[j]};
                break;
            }
        }

    if (es.size() == 1) {
        r.intersection = es[0] == h.ground;
        if (!r.intersection) r.intersection_witness = es[0];
    } else {
        for (const auto& e : es) {
            bool met = false;
            for (const auto& f : es)
                if (&e != &f && edges_intersect(e, f)) { met = true; break; }
            if (!met) {
                r.intersection = false;
                r.intersection_witness = e;
                break;
            }
        }
        if (es.empty()) {
            r.intersection = false;
        }
    }

    for (int x : h.ground)
        if (hypervertex_degree(es, x) == 0) r.missing_vertices.push_back(x);
    r.integrity = r.missing_vertices.empty() && !es.empty();
}

inline void enumerate_exact_covers(const Hypergraph& h, std::vector<std::vector<int>>& out) {
    const auto& es = h.edges;
    const int n = static_cast<int>(h.ground.size());
    if (n == 0 || n > 64 || es.empty() || es.size() > 20) return;
    std::vector<std::uint64_t> masks(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::uint64_t m = 0;
        for (int v : es[i]) {
            auto pos = std::lower_bound(h.ground.begin(), h.ground.end(), v) - h.ground.begin();
            m |= std::uint64_t{1} << pos;
        }
        masks[i] = m;
    }
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        if (covered == all) {
            out.push_back(chosen);
            return;
        }
        int lowest = std::countr_one(covered);  // first uncovered ground position
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!(masks[i] >> lowest & 1)) continue;
            if (masks[i] & covered) continue;
            chosen.push_back(static_cast<int>(i));
            self(self, covered | masks[i]);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
}

}  // namespace detail

inline Hypergraph complement_set(const Hypergraph& h);

inline StructureReport structure_report(const Hypergraph& h) {
    StructureReport r;
    const auto& es = h.edges;
    detail::check_three_i(h, r);

    for (int x : h.ground) r.degree_series.push_back(hypervertex_degree(es, x));
    std::sort(r.degree_series.begin(), r.degree_series.end());
    r.full = !r.degree_series.empty() && r.degree_series.front() >= 1;
    if (es.empty()) r.full = false;

    for (const auto& e : es) r.norm += static_cast<long long>(e.size());

    if (!es.empty()) {
        std::size_t lo = es[0].size(), hi = es[0].size();
        for (const auto& e : es) {
            lo = std::min(lo, e.size());
            hi = std::max(hi, e.size());
        }
        if (lo == hi) r.uniform_k = static_cast<int>(lo);
        r.equitable = hi - lo <= 1;
    }

    for (int x : h.ground)
        if (hypervertex_degree(es, x) == 1) r.isolated.push_back(x);

    // ear: disjoint from everything else, or some e* absorbs all its shared vertices
    for (const auto& e : es) {
        bool disjoint = true;
        for (const auto& f : es)
            if (&e != &f && edges_intersect(e, f)) { disjoint = false; break; }
        bool absorbed = false;
        for (const auto& star : es) {
            if (&star == &e) continue;
            bool ok = true;
            for (int x : edge_difference(e, star))
                if (hypervertex_degree(es, x) != 1) { ok = false; break; }
            if (ok) { absorbed = true; break; }
        }
        if (disjoint || absorbed) r.ears.push_back(e);
    }

    for (std::size_t i = 0; i < es.size() && r.euler; ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < es.size(); ++j)
            if (i != j && edges_intersect(es[i], es[j])) ++deg;
        if (deg % 2 != 0) r.euler = false;
    }

    // bipartite split of the intersection structure: every edge must meet the
    // other side and none of its own
    if (es.size() >= 2) {
        const int m = static_cast<int>(es.size());
        std::vector<std::vector<int>> adj(m);
        bool any_isolated = false;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j)
                if (i != j && edges_intersect(es[i], es[j])) adj[i].push_back(j);
            if (adj[i].empty()) any_isolated = true;
        }
        if (!any_isolated) {
            std::vector<int> side(m, -1);
            bool ok = true;
            for (int s = 0; s < m && ok; ++s) {
                if (side[s] != -1) continue;
                side[s] = 0;
                std::vector<int> stack{s};
                while (!stack.empty() && ok) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v : adj[u]) {
                        if (side[v] == -1) {
                            side[v] = 1 - side[u];
                            stack.push_back(v);
                        } else if (side[v] == side[u]) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if (ok) {
                HyperedgeSet s1, s2;
                for (int i = 0; i < m; ++i)
                    (side[i] == 0 ? s1 : s2).push_back(es[i]);
                if (!s1.empty() && !s2.empty())
                    r.bipartite_split = std::make_pair(std::move(s1), std::move(s2));
            }
        }
    }

    bool has_full_edge = false;
    for (const auto& e : es)
        if (e == h.ground) has_full_edge = true;
    if (!es.empty() && !has_full_edge)
        r.self_complementary = complement_set(h).edges == es;

    if (es.size() <= 20)
        detail::enumerate_exact_covers(h, r.perfect_hypermatchings);

    return r;
}

inline StructureReport verify_3i(const Hypergraph& h, bool strict = true) {
    StructureReport r = structure_report(h);
    r.overall = r.pass(strict);
    return r;
}

// ---------------------------------------------------------------------------
// complement

inline Hypergraph complement_set(const Hypergraph& h) {
    HyperedgeSet out;
    for (const auto& e : h.edges) {
        Hyperedge c = edge_difference(h.ground, e);
        if (c.empty())
            throw std::invalid_argument("complement_set: hyperedge {" +
                                        [&] {
                                            std::string s;
                                            for (int x : e) s += std::to_string(x) + ",";
                                            if (!s.empty()) s.pop_back();
                                            return s;
                                        }() +
                                        "} equals the ground set");
        out.push_back(std::move(c));
    }
    return make_hypergraph(h.ground, std::move(out));
}

// ---------------------------------------------------------------------------
// Graham reduction (GYO): drop contained hyperedges, delete vertices lying in
// at most one hyperedge, repeat; the empty hypergraph is a legal result.

inline Hypergraph graham_reduction(const Hypergraph& h) {
    std::vector<int> ground = h.ground;
    HyperedgeSet es = h.edges;
    bool changed = true;
    while (changed) {
        changed = false;

        HyperedgeSet kept;
        for (std::size_t i = 0; i < es.size(); ++i) {
            bool contained = false;
            for (std::size_t j = 0; j < es.size(); ++j)
                if (i != j && edge_subset(es[i], es[j]) &&
                    (es[i] != es[j] || i > j)) {
                    contained = true;
                    break;
                }
            if (!contained) kept.push_back(es[i]);
        }
        if (kept.size() != es.size()) {
            es = std::move(kept);
            changed = true;
        }

        std::vector<int> gone;
        for (int x : ground)
            if (hypervertex_degree(es, x) <= 1) gone.push_back(x);
        if (!gone.empty()) {
            changed = true;
            std::vector<int> g2;
            std::set_difference(ground.begin(), ground.end(), gone.begin(), gone.end(),
                                std::back_inserter(g2));
            ground = std::move(g2);
            HyperedgeSet next;
            for (auto& e : es) {
                Hyperedge trimmed = edge_difference(e, gone);
                if (!trimmed.empty()) next.push_back(std::move(trimmed));
            }
            es = make_family(std::move(next));
        }
    }
    return Hypergraph{std::move(ground), std::move(es)};
}

// ---------------------------------------------------------------------------
// dual

struct DualResult {
    Hypergraph dual;
    int duplicates_merged = 0;
};

inline DualResult dual_hypergraph(const Hypergraph& h) {
    const int n = static_cast<int>(h.edges.size());
    if (n == 0) throw std::invalid_argument("dual_hypergraph: empty hyperedge set");
    std::vector<Hyperedge> incidence;
    for (int x : h.ground) {
        Hyperedge inc;
        for (int i = 0; i < n; ++i)
            if (edge_contains(h.edges[static_cast<std::size_t>(i)], x)) inc.push_back(i + 1);
        if (inc.empty())
            throw std::invalid_argument("dual_hypergraph: vertex " + std::to_string(x) +
                                        " has degree 0");
        incidence.push_back(std::move(inc));
    }
    const int raw = static_cast<int>(incidence.size());
    Hypergraph dual = make_hypergraph(interval(1, n), std::move(incidence));
    const int merged = raw - static_cast<int>(dual.edges.size());
    return DualResult{std::move(dual), merged};
}

// ---------------------------------------------------------------------------
// self-complementing permutation (exhaustive; |ground| <= 8)

inline std::optional<std::vector<int>> self_complementing_permutation(const Hypergraph& h, int k) {
    StructureReport r = structure_report(h);
    if (!r.uniform_k || *r.uniform_k != k)
        throw std::invalid_argument("self_complementing_permutation: input is not k-uniform");
    if (h.ground.size() > 8)
        throw std::invalid_argument("self_complementing_permutation: ground set larger than 8");

    const int n = static_cast<int>(h.ground.size());
    // all k-subsets of the ground set
    HyperedgeSet ksubs;
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto gen = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            Hyperedge e;
            for (int t = 0; t < k; ++t) e.push_back(h.ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]);
            ksubs.push_back(std::move(e));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    if (k >= 1 && k <= n) gen(gen, 0, 0);
    if (h.edges.size() * 2 != ksubs.size()) return std::nullopt;  // counting obstruction

    std::vector<int> perm = h.ground;  // sigma as a reordering of the ground set
    std::vector<std::size_t> order(perm.size());
    std::iota(order.begin(), order.end(), 0);
    auto in_family = [&](const Hyperedge& e) {
        return std::binary_search(h.edges.begin(), h.edges.end(), e);
    };
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (const auto& e : ksubs) {
            Hyperedge img;
            for (int v : e) {
                auto pos = std::lower_bound(h.ground.begin(), h.ground.end(), v) - h.ground.begin();
                img.push_back(perm[static_cast<std::size_t>(pos)]);
            }
            img = make_edge(std::move(img));
            if (in_family(e) == in_family(img)) { ok = false; break; }
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace hypertopo
