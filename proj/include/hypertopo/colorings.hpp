#pragma once

#include <array>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypertopo/core.hpp"
#include "hypertopo/graph.hpp"
#include "hypertopo/intersected.hpp"

namespace hypertopo {

struct TotalColoring {
    Graph graph;
    std::map<int, int> vertex_colors;
    std::map<std::pair<int, int>, int> edge_colors;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;  // (X, Y)
};

inline int vcolor(const TotalColoring& c, int u) { return c.vertex_colors.at(u); }

inline int ecolor(const TotalColoring& c, int u, int v) {
    if (u > v) std::swap(u, v);
    return c.edge_colors.at({u, v});
}

inline bool fully_colored(const TotalColoring& c) {
    for (int v = 0; v < c.graph.n; ++v)
        if (!c.vertex_colors.count(v)) return false;
    for (auto e : c.graph.edges)
        if (!c.edge_colors.count(e)) return false;
    return true;
}

namespace detail {

inline void require_bipartition(const TotalColoring& c) {
    if (!c.bipartition) throw std::invalid_argument("coloring lacks a bipartition");
    const auto& [x, y] = *c.bipartition;
    std::vector<int> side(static_cast<std::size_t>(c.graph.n), -1);
    for (int v : x) side.at(static_cast<std::size_t>(v)) = 0;
    for (int v : y) {
        if (side.at(static_cast<std::size_t>(v)) == 0)
            throw std::invalid_argument("bipartition sides overlap");
        side.at(static_cast<std::size_t>(v)) = 1;
    }
    for (int v = 0; v < c.graph.n; ++v)
        if (side[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("bipartition misses a vertex");
    for (auto [u, v] : c.graph.edges)
        if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
            throw std::invalid_argument("bipartition has a non-crossing edge");
}

inline bool in_x_side(const TotalColoring& c, int v) {
    const auto& x = c.bipartition->first;
    return std::find(x.begin(), x.end(), v) != x.end();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Topcode matrix: one column (tail, edge, head) per edge, canonical edge order

template <class Label>
struct TopcodeMatrix {
    std::vector<std::array<Label, 3>> columns;
    bool operator==(const TopcodeMatrix&) const = default;
};

template <class Label>
inline std::vector<TopcodeMatrix<Label>> topcode_split(const TopcodeMatrix<Label>& m) {
    std::vector<TopcodeMatrix<Label>> out;
    for (const auto& col : m.columns) out.push_back(TopcodeMatrix<Label>{{col}});
    return out;
}

template <class Label>
inline TopcodeMatrix<Label> topcode_union(const std::vector<TopcodeMatrix<Label>>& parts) {
    TopcodeMatrix<Label> out;
    for (const auto& p : parts)
        for (const auto& col : p.columns) out.columns.push_back(col);
    return out;
}

template <class Label>
inline bool topcode_same_columns(TopcodeMatrix<Label> a, TopcodeMatrix<Label> b) {
    std::sort(a.columns.begin(), a.columns.end());
    std::sort(b.columns.begin(), b.columns.end());
    return a.columns == b.columns;
}

inline TopcodeMatrix<int> build_topcode_matrix(const TotalColoring& c) {
    if (!fully_colored(c))
        throw std::invalid_argument("build_topcode_matrix: uncolored element");
    TopcodeMatrix<int> m;
    for (auto [u, v] : c.graph.edges) {
        int x = u, y = v;
        if (c.bipartition && !detail::in_x_side(c, u)) std::swap(x, y);
        m.columns.push_back({vcolor(c, x), ecolor(c, u, v), vcolor(c, y)});
    }
    return m;
}

inline TopcodeMatrix<Hyperedge> build_topcode_matrix(const SetColoredGraph& g) {
    if (!g.edge_labels)
        throw std::invalid_argument("build_topcode_matrix: edge labels missing");
    TopcodeMatrix<Hyperedge> m;
    for (auto [u, v] : g.graph.edges)
        m.columns.push_back({g.vertex_labels[static_cast<std::size_t>(u)], edge_label(g, u, v),
                             g.vertex_labels[static_cast<std::size_t>(v)]});
    return m;
}

// ---------------------------------------------------------------------------
// parameterized (k,d)-total colorings

enum class KdKind {
    Graceful,
    OddGraceful,
    EdgeAntimagic,
    Harmonious,
    OddElegant,
    EdgeMagic,
    EdgeDifference,
    FelicitousDifference,
    GracefulDifference,
};

struct KdParams {
    KdKind kind = KdKind::Graceful;
    int k = 0;
    int d = 1;
    bool strong = false;
};

struct KdReport {
    bool lattice_ok = true;    // colors live on the (k,d) progressions
    bool edge_rule_ok = true;
    std::optional<std::pair<int, int>> edge_witness;
    bool edge_set_ok = true;   // the required edge-color-set identity
    bool total_set_ok = true;
    bool strong_ok = true;
    std::optional<long long> constant;
    bool pass() const {
        return lattice_ok && edge_rule_ok && edge_set_ok && total_set_ok && strong_ok;
    }
};

namespace detail {

inline bool perfect_matching_with(const Graph& g, auto&& edge_ok) {
    if (g.n % 2 != 0) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.n), false);
    auto rec = [&](auto&& self) -> bool {
        int u = -1;
        for (int v = 0; v < g.n; ++v)
            if (!used[static_cast<std::size_t>(v)]) { u = v; break; }
        if (u == -1) return true;
        used[static_cast<std::size_t>(u)] = true;
        for (int v = u + 1; v < g.n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !has_edge(g, u, v) || !edge_ok(u, v)) continue;
            used[static_cast<std::size_t>(v)] = true;
            if (self(self)) return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(u)] = false;
        return false;
    };
    return rec(rec);
}

}  // namespace detail

inline KdReport verify_kd_total_coloring(const TotalColoring& c, const KdParams& p) {
    detail::require_bipartition(c);
    if (!fully_colored(c))
        throw std::invalid_argument("verify_kd_total_coloring: uncolored element");
    const int q = static_cast<int>(c.graph.edges.size());
    const int k = p.k, d = p.d;
    if (d < 1 || k < 0) throw std::invalid_argument("verify_kd_total_coloring: need d >= 1, k >= 0");
    KdReport r;

    auto on_x_lattice = [&](int val) { return val >= 0 && val % d == 0; };
    auto on_y_lattice = [&](int val) { return val >= k && (val - k) % d == 0; };
    for (int v = 0; v < c.graph.n; ++v) {
        int val = vcolor(c, v);
        if (detail::in_x_side(c, v) ? !on_x_lattice(val) : !on_y_lattice(val)) r.lattice_ok = false;
    }
    for (auto [u, v] : c.graph.edges)
        if (!on_y_lattice(ecolor(c, u, v))) r.lattice_ok = false;

    std::set<int> edge_set;
    std::vector<long long> sums;
    for (auto [u, v] : c.graph.edges) {
        edge_set.insert(ecolor(c, u, v));
        sums.push_back(static_cast<long long>(vcolor(c, u)) + vcolor(c, v) + ecolor(c, u, v));
    }
    auto progression = [&](int first, int step, int count) {
        std::set<int> s;
        for (int i = 0; i < count; ++i) s.insert(first + i * step);
        return s;
    };
    const std::set<int> graceful_set = progression(k, d, q);
    const std::set<int> odd_set = progression(k + d, 2 * d, q);

    auto abs_rule = [&](int u, int v) { return std::abs(vcolor(c, u) - vcolor(c, v)); };
    auto check_each_edge = [&](auto&& rule) {
        for (auto [u, v] : c.graph.edges)
            if (!rule(u, v)) {
                r.edge_rule_ok = false;
                if (!r.edge_witness) r.edge_witness = std::make_pair(u, v);
            }
    };
    auto total_subset = [&](int span) {
        // every used color is a multiple of d or lies on {k, k+d, ..., k+span*d}
        for (int v = 0; v < c.graph.n; ++v) {
            int val = vcolor(c, v);
            if (!(on_x_lattice(val) || (on_y_lattice(val) && val <= k + span * d)))
                return false;
        }
        for (auto [u, v] : c.graph.edges) {
            int val = ecolor(c, u, v);
            if (!(on_x_lattice(val) || (on_y_lattice(val) && val <= k + span * d)))
                return false;
        }
        return true;
    };
    auto derive_constant = [&](auto&& value) {
        bool first = true;
        long long cst = 0;
        for (auto [u, v] : c.graph.edges) {
            long long got = value(u, v);
            if (first) {
                cst = got;
                first = false;
            } else if (got != cst) {
                r.edge_rule_ok = false;
                if (!r.edge_witness) r.edge_witness = std::make_pair(u, v);
            }
        }
        if (r.edge_rule_ok && !first) r.constant = cst;
    };

    switch (p.kind) {
    case KdKind::Graceful:
        check_each_edge([&](int u, int v) { return ecolor(c, u, v) == abs_rule(u, v); });
        r.edge_set_ok = edge_set == graceful_set;
        r.total_set_ok = total_subset(q - 1);
        if (p.strong)
            r.strong_ok = detail::perfect_matching_with(c.graph, [&](int u, int v) {
                return vcolor(c, u) + vcolor(c, v) == k + (q - 1) * d;
            });
        break;
    case KdKind::OddGraceful:
        check_each_edge([&](int u, int v) { return ecolor(c, u, v) == abs_rule(u, v); });
        r.edge_set_ok = edge_set == odd_set;
        r.total_set_ok = total_subset(2 * q - 1);
        if (p.strong)
            r.strong_ok = detail::perfect_matching_with(c.graph, [&](int u, int v) {
                return vcolor(c, u) + vcolor(c, v) == k + (2 * q - 1) * d;
            });
        break;
    case KdKind::EdgeAntimagic: {
        long long lo = sums.empty() ? 0 : *std::min_element(sums.begin(), sums.end());
        long long twok = 2LL * k;
        bool offset_ok = lo >= twok && (lo - twok) % (2 * d) == 0;
        std::set<long long> want;
        for (int i = 0; i < q; ++i) want.insert(lo + 2LL * d * i);
        std::set<long long> got(sums.begin(), sums.end());
        r.edge_set_ok = offset_ok && got == want;
        if (offset_ok && q > 0) {
            long long a = (lo - twok) / (2 * d);
            r.total_set_ok = total_subset(static_cast<int>(a + 2 * (a + q - 1)));
            r.constant = a;
        }
        break;
    }
    case KdKind::Harmonious:
        check_each_edge([&](int u, int v) {
            long long lhs = (ecolor(c, u, v) - k) % (static_cast<long long>(q) * d);
            long long rhs = (static_cast<long long>(vcolor(c, u)) + vcolor(c, v) - k) %
                            (static_cast<long long>(q) * d);
            if (lhs < 0) lhs += static_cast<long long>(q) * d;
            if (rhs < 0) rhs += static_cast<long long>(q) * d;
            return lhs == rhs;
        });
        r.edge_set_ok = edge_set == graceful_set;
        break;
    case KdKind::OddElegant:
        check_each_edge([&](int u, int v) {
            long long lhs = (ecolor(c, u, v) - k) % (static_cast<long long>(q) * d);
            long long rhs = (static_cast<long long>(vcolor(c, u)) + vcolor(c, v) - k) %
                            (static_cast<long long>(q) * d);
            if (lhs < 0) lhs += static_cast<long long>(q) * d;
            if (rhs < 0) rhs += static_cast<long long>(q) * d;
            return lhs == rhs;
        });
        r.edge_set_ok = edge_set == odd_set;
        break;
    case KdKind::EdgeMagic:
        derive_constant([&](int u, int v) {
            return static_cast<long long>(vcolor(c, u)) + ecolor(c, u, v) + vcolor(c, v);
        });
        if (p.strong) {
            r.edge_set_ok = edge_set == graceful_set;
            r.total_set_ok = total_subset(q - 1);
        }
        break;
    case KdKind::EdgeDifference:
        derive_constant([&](int u, int v) {
            return static_cast<long long>(ecolor(c, u, v)) + std::abs(vcolor(c, u) - vcolor(c, v));
        });
        if (p.strong) r.edge_set_ok = edge_set == graceful_set;
        break;
    case KdKind::FelicitousDifference:
        derive_constant([&](int u, int v) {
            return std::abs(static_cast<long long>(vcolor(c, u)) + vcolor(c, v) - ecolor(c, u, v));
        });
        if (p.strong) r.edge_set_ok = edge_set == graceful_set;
        break;
    case KdKind::GracefulDifference:
        derive_constant([&](int u, int v) {
            return std::abs(static_cast<long long>(std::abs(vcolor(c, u) - vcolor(c, v))) -
                            ecolor(c, u, v));
        });
        if (p.strong) r.edge_set_ok = edge_set == graceful_set;
        break;
    }
    return r;
}

// ---------------------------------------------------------------------------
// set-ordered graceful labeling

struct SetOrderedReport {
    bool injective = true;
    bool set_ordered = true;
    bool edge_rule = true;       // f(xy) = f(y) - f(x)
    bool edge_set = true;        // f(E) = [1, q]
    std::optional<std::pair<int, int>> witness;
    bool pass() const { return injective && set_ordered && edge_rule && edge_set; }
};

inline SetOrderedReport verify_set_ordered_graceful(const TotalColoring& c) {
    detail::require_bipartition(c);
    if (!fully_colored(c))
        throw std::invalid_argument("verify_set_ordered_graceful: uncolored element");
    SetOrderedReport r;
    std::set<int> vals;
    for (int v = 0; v < c.graph.n; ++v) vals.insert(vcolor(c, v));
    r.injective = static_cast<int>(vals.size()) == c.graph.n;

    const auto& [xs, ys] = *c.bipartition;
    int max_x = std::numeric_limits<int>::min(), min_y = std::numeric_limits<int>::max();
    for (int v : xs) max_x = std::max(max_x, vcolor(c, v));
    for (int v : ys) min_y = std::min(min_y, vcolor(c, v));
    r.set_ordered = !xs.empty() && !ys.empty() && max_x < min_y;

    std::set<int> edge_vals;
    for (auto [u, v] : c.graph.edges) {
        int x = detail::in_x_side(c, u) ? u : v;
        int y = x == u ? v : u;
        if (ecolor(c, u, v) != vcolor(c, y) - vcolor(c, x)) {
            r.edge_rule = false;
            if (!r.witness) r.witness = std::make_pair(u, v);
        }
        edge_vals.insert(ecolor(c, u, v));
    }
    std::set<int> want;
    for (int i = 1; i <= static_cast<int>(c.graph.edges.size()); ++i) want.insert(i);
    r.edge_set = edge_vals == want;
    return r;
}

// ---------------------------------------------------------------------------
// odd-even separable 6C-labeling

struct SixCReport {
    bool total_set = true;        // (i)   bijection onto [1, p+q]
    bool e_magic = true;          // (ii)
    std::optional<long long> e_magic_constant;
    bool ee_difference = true;    // (iii)
    bool ee_balanced = true;      // (iv)
    std::optional<long long> ee_balanced_constant;
    std::vector<std::string> ev_ordered_alternatives;  // (v)
    bool ev_ordered = true;
    bool ve_matching = true;      // (vi)
    std::optional<long long> ve_matching_constant;
    bool set_ordered = true;      // (vii)
    bool odd_even_separable = true;  // (viii)
    bool pass() const {
        return total_set && e_magic && ee_difference && ee_balanced && ev_ordered &&
               ve_matching && set_ordered && odd_even_separable;
    }
};

inline SixCReport verify_6c_labeling(const TotalColoring& c) {
    if (!fully_colored(c)) throw std::invalid_argument("verify_6c_labeling: uncolored element");
    SixCReport r;
    const int p = c.graph.n;
    const int q = static_cast<int>(c.graph.edges.size());

    std::vector<int> vvals, evals;
    for (int v = 0; v < p; ++v) vvals.push_back(vcolor(c, v));
    for (auto [u, v] : c.graph.edges) evals.push_back(ecolor(c, u, v));
    {
        std::vector<int> all = vvals;
        all.insert(all.end(), evals.begin(), evals.end());
        std::sort(all.begin(), all.end());
        std::vector<int> want = interval(1, p + q);
        r.total_set = all == want;
    }

    {
        bool first = true;
        long long kk = 0;
        for (auto [u, v] : c.graph.edges) {
            long long got = ecolor(c, u, v) + std::abs(vcolor(c, u) - vcolor(c, v));
            if (first) { kk = got; first = false; }
            else if (got != kk) r.e_magic = false;
        }
        if (r.e_magic && !first) r.e_magic_constant = kk;
    }

    {
        const long long wrap = 2LL * (p + q);
        for (std::size_t i = 0; i < c.graph.edges.size() && r.ee_difference; ++i) {
            bool matched = c.graph.edges.size() == 1;  // vacuous with a single edge
            for (std::size_t j = 0; j < c.graph.edges.size(); ++j) {
                if (i == j) continue;
                auto [x, y] = c.graph.edges[j];
                long long diff = std::abs(vcolor(c, x) - vcolor(c, y));
                if (evals[i] == diff || evals[i] == wrap - diff) { matched = true; break; }
            }
            if (!matched) r.ee_difference = false;
        }
    }

    {
        const long long wrap = 2LL * (p + q);
        auto s = [&](std::size_t i) {
            auto [u, v] = c.graph.edges[i];
            return static_cast<long long>(std::abs(vcolor(c, u) - vcolor(c, v))) - evals[i];
        };
        if (c.graph.edges.size() <= 1) {
            r.ee_balanced = true;
        } else {
            std::set<long long> candidates;
            for (std::size_t j = 1; j < c.graph.edges.size(); ++j) {
                candidates.insert(s(0) + s(j));
                candidates.insert(wrap + s(0) + s(j));
            }
            bool any = false;
            for (long long kp : candidates) {
                bool all_ok = true;
                for (std::size_t i = 0; i < c.graph.edges.size() && all_ok; ++i) {
                    bool m = false;
                    for (std::size_t j = 0; j < c.graph.edges.size(); ++j) {
                        if (i == j) continue;
                        if (s(i) + s(j) == kp || wrap + s(i) + s(j) == kp) { m = true; break; }
                    }
                    all_ok = m;
                }
                if (all_ok) {
                    any = true;
                    r.ee_balanced_constant = kp;
                    break;
                }
            }
            r.ee_balanced = any;
        }
    }

    {
        std::set<int> vs(vvals.begin(), vvals.end()), es(evals.begin(), evals.end());
        auto all_odd = [](const std::set<int>& s) {
            for (int x : s)
                if (x % 2 == 0) return false;
            return true;
        };
        auto all_even = [](const std::set<int>& s) {
            for (int x : s)
                if (x % 2 != 0) return false;
            return true;
        };
        if (!es.empty() && !vs.empty()) {
            if (*vs.begin() > *es.rbegin()) r.ev_ordered_alternatives.push_back("min f(V) > max f(E)");
            if (*vs.rbegin() < *es.begin()) r.ev_ordered_alternatives.push_back("max f(V) < min f(E)");
        }
        if (std::includes(es.begin(), es.end(), vs.begin(), vs.end()))
            r.ev_ordered_alternatives.push_back("f(V) subset of f(E)");
        if (std::includes(vs.begin(), vs.end(), es.begin(), es.end()))
            r.ev_ordered_alternatives.push_back("f(E) subset of f(V)");
        if (all_odd(vs) && all_even(es))
            r.ev_ordered_alternatives.push_back("f(V) odd-set, f(E) even-set");
        r.ev_ordered = !r.ev_ordered_alternatives.empty();
        r.odd_even_separable = all_odd(vs) && all_even(es);
    }

    {
        const int singular = (p + q + 1) / 2;
        std::set<long long> candidates;
        if (!evals.empty()) {
            for (int w = 0; w < p; ++w) candidates.insert(static_cast<long long>(evals[0]) + vcolor(c, w));
        }
        bool any = evals.empty();
        for (long long kpp : candidates) {
            bool ok = true;
            for (int e : evals) {
                bool m = false;
                for (int w = 0; w < p; ++w)
                    if (e + vcolor(c, w) == kpp) { m = true; break; }
                if (!m) { ok = false; break; }
            }
            for (int w = 0; w < p && ok; ++w) {
                if (vcolor(c, w) == singular) continue;
                bool m = false;
                for (int e : evals)
                    if (e + vcolor(c, w) == kpp) { m = true; break; }
                if (!m) ok = false;
            }
            if (ok) {
                any = true;
                r.ve_matching_constant = kpp;
                break;
            }
        }
        r.ve_matching = any;
    }

    if (c.bipartition) {
        const auto& [xs, ys] = *c.bipartition;
        int max_x = std::numeric_limits<int>::min(), min_x = std::numeric_limits<int>::max();
        int max_y = std::numeric_limits<int>::min(), min_y = std::numeric_limits<int>::max();
        for (int v : xs) { max_x = std::max(max_x, vcolor(c, v)); min_x = std::min(min_x, vcolor(c, v)); }
        for (int v : ys) { max_y = std::max(max_y, vcolor(c, v)); min_y = std::min(min_y, vcolor(c, v)); }
        r.set_ordered = !xs.empty() && !ys.empty() && (max_x < min_y || min_x > max_y);
    } else {
        r.set_ordered = false;
    }
    return r;
}

// ---------------------------------------------------------------------------
// compound colorings built from B base colorings

struct CompoundElement {
    std::string str;            // permuted colors, concatenated
    std::vector<int> sequence;  // permuted colors as a tuple
    Hyperedge value_set;
    long long lattice = 0;
};

struct CompoundColoring {
    std::map<int, CompoundElement> vertices;
    std::map<std::pair<int, int>, CompoundElement> edges;
    bool uniform = false;
};

inline CompoundColoring compound_colorings(const std::vector<TotalColoring>& bases,
                                           const std::array<std::vector<int>, 3>& perms,
                                           const std::vector<long long>& coefficients) {
    if (bases.size() < 2) throw std::invalid_argument("compound_colorings: need B >= 2 bases");
    const auto B = bases.size();
    for (const auto& b : bases)
        if (b.graph != bases[0].graph)
            throw std::invalid_argument("compound_colorings: mismatched graphs");
    for (const auto& p : perms) {
        std::vector<int> s = p;
        std::sort(s.begin(), s.end());
        std::vector<int> want(B);
        std::iota(want.begin(), want.end(), 0);
        if (s != want) throw std::invalid_argument("compound_colorings: bad permutation");
    }
    if (coefficients.size() != B)
        throw std::invalid_argument("compound_colorings: coefficient count mismatch");
    long long csum = 0;
    for (long long a : coefficients) {
        if (a < 0) throw std::invalid_argument("compound_colorings: negative coefficient");
        csum += a;
    }
    if (csum < 1) throw std::invalid_argument("compound_colorings: coefficients sum to zero");
    detail::require_bipartition(bases[0]);

    CompoundColoring out;
    out.uniform = perms[0] == perms[1] && perms[1] == perms[2];

    auto fill = [&](const std::vector<int>& perm, auto&& get) {
        CompoundElement el;
        for (std::size_t t = 0; t < B; ++t) {
            int val = get(bases[static_cast<std::size_t>(perm[t])]);
            el.sequence.push_back(val);
            el.str += std::to_string(val);
            el.lattice += coefficients[t] * val;  // a_k weights position k
        }
        std::vector<int> vals;
        for (std::size_t s = 0; s < B; ++s) vals.push_back(get(bases[s]));
        el.value_set = make_edge(std::move(vals));
        return el;
    };

    for (int v = 0; v < bases[0].graph.n; ++v) {
        const auto& perm = detail::in_x_side(bases[0], v) ? perms[0] : perms[2];
        out.vertices[v] = fill(perm, [&](const TotalColoring& b) { return vcolor(b, v); });
    }
    for (auto [u, v] : bases[0].graph.edges)
        out.edges[{u, v}] = fill(perms[1], [&](const TotalColoring& b) { return ecolor(b, u, v); });
    return out;
}

// ---------------------------------------------------------------------------
// neighbor color sets and the induced hypergraph

struct DneiVertexRecord {
    int vertex = 0;
    Hyperedge cv, cv_closed, ce, ce_closed;
};

struct DneiResult {
    Hypergraph hypergraph;
    std::vector<DneiVertexRecord> records;
};

inline DneiResult derive_dnei_sets(const TotalColoring& c) {
    if (!fully_colored(c)) throw std::invalid_argument("derive_dnei_sets: uncolored element");
    DneiResult out;
    std::vector<int> all_colors;
    for (int v = 0; v < c.graph.n; ++v) all_colors.push_back(vcolor(c, v));
    for (auto [u, v] : c.graph.edges) all_colors.push_back(ecolor(c, u, v));
    std::vector<int> ground = make_edge(std::move(all_colors));

    std::vector<Hyperedge> edges;
    for (int u = 0; u < c.graph.n; ++u) {
        DneiVertexRecord rec;
        rec.vertex = u;
        std::vector<int> cv, ce;
        for (int v : neighbors(c.graph, u)) {
            cv.push_back(vcolor(c, v));
            ce.push_back(ecolor(c, u, v));
        }
        rec.cv = make_edge(cv);
        rec.ce = make_edge(ce);
        cv.push_back(vcolor(c, u));
        ce.push_back(vcolor(c, u));
        rec.cv_closed = make_edge(cv);
        rec.ce_closed = make_edge(ce);
        for (const auto& e : {rec.cv, rec.cv_closed, rec.ce, rec.ce_closed})
            if (!e.empty()) edges.push_back(e);
        out.records.push_back(std::move(rec));
    }
    out.hypergraph = make_hypergraph(ground, std::move(edges));
    return out;
}

// ---------------------------------------------------------------------------
// adjacent-distinguishing checks on set-colored graphs

enum class DistVariant { V, ClosedV, E, ClosedE, VE, ClosedVE, Closed4 };

struct DistReport {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;
};

inline DistReport verify_distinguishing(const SetColoredGraph& g, DistVariant variant) {
    const bool needs_edges = variant == DistVariant::E || variant == DistVariant::ClosedE ||
                             variant == DistVariant::VE || variant == DistVariant::ClosedVE ||
                             variant == DistVariant::Closed4;
    if (needs_edges && !g.edge_labels)
        throw std::invalid_argument("verify_distinguishing: edge labels required");

    auto cv = [&](int x) {
        HyperedgeSet s;
        for (int y : neighbors(g.graph, x)) s.push_back(g.vertex_labels[static_cast<std::size_t>(y)]);
        return make_family(std::move(s));
    };
    auto ce = [&](int x) {
        HyperedgeSet s;
        for (int y : neighbors(g.graph, x)) s.push_back(edge_label(g, x, y));
        return make_family(std::move(s));
    };
    auto closed = [&](HyperedgeSet s, int x) {
        s.push_back(g.vertex_labels[static_cast<std::size_t>(x)]);
        return make_family(std::move(s));
    };
    auto merged = [&](HyperedgeSet a, const HyperedgeSet& b) {
        for (const auto& e : b) a.push_back(e);
        return make_family(std::move(a));
    };
    auto signature = [&](int x) -> std::vector<HyperedgeSet> {
        switch (variant) {
        case DistVariant::V: return {cv(x)};
        case DistVariant::ClosedV: return {closed(cv(x), x)};
        case DistVariant::E: return {ce(x)};
        case DistVariant::ClosedE: return {closed(ce(x), x)};
        case DistVariant::VE: return {merged(cv(x), ce(x))};
        case DistVariant::ClosedVE: return {closed(merged(cv(x), ce(x)), x)};
        case DistVariant::Closed4: {
            std::vector<HyperedgeSet> quad{ce(x), closed(ce(x), x), closed(cv(x), x),
                                           closed(merged(cv(x), ce(x)), x)};
            std::sort(quad.begin(), quad.end());
            return quad;
        }
        }
        return {};
    };

    DistReport r;
    for (auto [u, v] : g.graph.edges)
        if (signature(u) == signature(v)) {
            r.ok = false;
            if (!r.witness) r.witness = std::make_pair(u, v);
        }
    return r;
}

// ---------------------------------------------------------------------------
// set-ordered W-constraint hyperedge sets

enum class WTag { Graceful, EdgeMagic, EdgeDifference, FelicitousDifference, GracefulDifference };

struct WParts {
    HyperedgeSet x_parts, e_parts, y_parts;
};

struct WReport {
    bool partition_ok = true;
    bool membership_ok = true;   // union is the consecutive ground interval
    bool set_ordered_ok = true;
    bool constraint_ok = true;   // every gamma realizable
    bool full = true;            // every alpha and every beta participate
    std::optional<long long> constant;
    std::vector<int> unrealized;           // gamma values without witnesses
    std::vector<int> realized;             // gamma values realized
    bool pass() const {
        return partition_ok && membership_ok && set_ordered_ok && constraint_ok;
    }
};

inline WReport verify_w_constraint_hyperedge_set(const Hypergraph& h, const WParts& parts,
                                                 WTag tag) {
    WReport r;
    HyperedgeSet all;
    for (const auto& e : parts.x_parts) all.push_back(e);
    for (const auto& e : parts.e_parts) all.push_back(e);
    for (const auto& e : parts.y_parts) all.push_back(e);
    const std::size_t raw = all.size();
    all = make_family(std::move(all));
    if (all.size() != raw || all != h.edges) {
        r.partition_ok = false;
        throw std::invalid_argument("verify_w_constraint_hyperedge_set: parts do not partition the family");
    }

    Hyperedge cover;
    for (const auto& e : all) cover = edge_union(cover, e);
    r.membership_ok = !cover.empty() && cover == h.ground &&
                      cover == interval(cover.front(), cover.back());

    std::vector<int> alphas, betas, gammas;
    for (const auto& e : parts.x_parts) for (int v : e) alphas.push_back(v);
    for (const auto& e : parts.y_parts) for (int v : e) betas.push_back(v);
    for (const auto& e : parts.e_parts) for (int v : e) gammas.push_back(v);
    alphas = make_edge(alphas);
    betas = make_edge(betas);
    gammas = make_edge(gammas);
    r.set_ordered_ok = !alphas.empty() && !betas.empty() && alphas.back() < betas.front();

    auto satisfies = [&](int alpha, int gamma, int beta, long long cst) {
        switch (tag) {
        case WTag::Graceful: return static_cast<long long>(gamma) == beta - alpha;
        case WTag::EdgeMagic: return static_cast<long long>(alpha) + gamma + beta == cst;
        case WTag::EdgeDifference: return gamma + std::abs(alpha - beta) == cst;
        case WTag::FelicitousDifference:
            return std::abs(static_cast<long long>(alpha) + beta - gamma) == cst;
        case WTag::GracefulDifference:
            return std::abs(static_cast<long long>(std::abs(alpha - beta)) - gamma) == cst;
        }
        return false;
    };
    auto evaluate = [&](long long cst, WReport& rep) {
        rep.unrealized.clear();
        rep.realized.clear();
        bool gamma_ok = true;
        for (int g : gammas) {
            bool m = false;
            for (int a : alphas) {
                for (int b : betas)
                    if (satisfies(a, g, b, cst)) { m = true; break; }
                if (m) break;
            }
            (m ? rep.realized : rep.unrealized).push_back(g);
            gamma_ok = gamma_ok && m;
        }
        bool alpha_ok = true;
        for (int a : alphas) {
            bool m = false;
            for (int g : gammas) {
                for (int b : betas)
                    if (satisfies(a, g, b, cst)) { m = true; break; }
                if (m) break;
            }
            alpha_ok = alpha_ok && m;
        }
        bool beta_ok = true;
        for (int b : betas) {
            bool m = false;
            for (int g : gammas) {
                for (int a : alphas)
                    if (satisfies(a, g, b, cst)) { m = true; break; }
                if (m) break;
            }
            beta_ok = beta_ok && m;
        }
        rep.constraint_ok = gamma_ok;
        rep.full = gamma_ok && alpha_ok && beta_ok;
    };

    if (tag == WTag::Graceful) {
        evaluate(0, r);
    } else {
        std::set<long long> candidates;
        if (!gammas.empty())
            for (int a : alphas)
                for (int b : betas) {
                    int g = gammas.front();
                    switch (tag) {
                    case WTag::EdgeMagic: candidates.insert(static_cast<long long>(a) + g + b); break;
                    case WTag::EdgeDifference: candidates.insert(g + std::abs(a - b)); break;
                    case WTag::FelicitousDifference:
                        candidates.insert(std::abs(static_cast<long long>(a) + b - g));
                        break;
                    case WTag::GracefulDifference:
                        candidates.insert(std::abs(static_cast<long long>(std::abs(a - b)) - g));
                        break;
                    default: break;
                    }
                }
        bool found = false;
        WReport best = r;
        for (long long cst : candidates) {
            WReport trial = r;
            evaluate(cst, trial);
            if (trial.constraint_ok && (!found || (trial.full && !best.full))) {
                best = trial;
                best.constant = cst;
                found = true;
                if (best.full) break;
            }
        }
        if (found) {
            best.partition_ok = r.partition_ok;
            best.membership_ok = r.membership_ok;
            best.set_ordered_ok = r.set_ordered_ok;
            r = best;
        } else {
            evaluate(candidates.empty() ? 0 : *candidates.begin(), r);
            r.constraint_ok = false;
            r.full = false;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// chromatic parameters

struct Chromatics {
    int chi_prime = 0;   // proper hyperedge coloring = coloring the intersected graph
    int chi = 0;         // hypervertex coloring, no monochromatic |e| >= 2
    int chi_total = 0;   // single palette serving both constraints
    bool exact = true;
};

namespace detail {

inline int hypervertex_chromatic(const Hypergraph& h) {
    const int n = static_cast<int>(h.ground.size());
    if (n == 0) return 0;
    std::vector<const Hyperedge*> big;
    for (const auto& e : h.edges)
        if (e.size() >= 2) big.push_back(&e);
    if (big.empty()) return 1;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto pos = [&](int x) {
        return static_cast<std::size_t>(
            std::lower_bound(h.ground.begin(), h.ground.end(), x) - h.ground.begin());
    };
    auto ok_so_far = [&](int upto) {
        for (const Hyperedge* e : big) {
            bool complete = true, mono = true;
            int first = -1;
            for (int x : *e) {
                auto p = pos(x);
                if (static_cast<int>(p) > upto || color[p] == -1) { complete = false; break; }
                if (first == -1) first = color[p];
                else if (color[p] != first) mono = false;
            }
            if (complete && mono) return false;
        }
        return true;
    };
    for (int k = 1; k <= n; ++k) {
        auto rec = [&](auto&& self, int i) -> bool {
            if (i == n) return true;
            for (int col = 0; col < k; ++col) {
                color[static_cast<std::size_t>(i)] = col;
                if (ok_so_far(i) && self(self, i + 1)) return true;
            }
            color[static_cast<std::size_t>(i)] = -1;
            return false;
        };
        std::fill(color.begin(), color.end(), -1);
        if (rec(rec, 0)) return k;
    }
    return n;
}

inline Graph two_section(const Hypergraph& h) {
    const int n = static_cast<int>(h.ground.size());
    auto pos = [&](int x) {
        return static_cast<int>(std::lower_bound(h.ground.begin(), h.ground.end(), x) -
                                h.ground.begin());
    };
    std::vector<std::pair<int, int>> es;
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                es.emplace_back(pos(e[i]), pos(e[j]));
    return make_graph(n, std::move(es));
}

}  // namespace detail

inline Chromatics hypergraph_chromatics(const Hypergraph& h, bool hyper_total_strict = false) {
    Chromatics out;
    Graph inter = build_v_intersected(h).graph;
    if (h.edges.size() <= 16 && h.ground.size() <= 12) {
        out.chi_prime = chromatic_number(inter);
        out.chi = detail::hypervertex_chromatic(h);
        out.chi_total = std::max(out.chi_prime,
                                 hyper_total_strict
                                     ? chromatic_number(detail::two_section(h))
                                     : out.chi);
    } else {
        out.exact = false;
        out.chi_prime = greedy_coloring_bound(inter);
        out.chi = greedy_coloring_bound(detail::two_section(h));
        out.chi_total = std::max(out.chi_prime, out.chi);
    }
    return out;
}

// ---------------------------------------------------------------------------
// dual labelling

enum class DualScope { All, Vertices, Edges };

inline TotalColoring dual_labelling(const TotalColoring& c, DualScope scope = DualScope::All) {
    TotalColoring out = c;
    bool use_v = scope != DualScope::Edges && !c.vertex_colors.empty();
    bool use_e = scope != DualScope::Vertices && !c.edge_colors.empty();
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    if (use_v)
        for (const auto& [v, val] : c.vertex_colors) {
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
    if (use_e)
        for (const auto& [e, val] : c.edge_colors) {
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
    if (!use_v && !use_e) return out;
    if (use_v)
        for (auto& [v, val] : out.vertex_colors) val = hi + lo - val;
    if (use_e)
        for (auto& [e, val] : out.edge_colors) val = hi + lo - val;
    return out;
}

}  // namespace hypertopo
