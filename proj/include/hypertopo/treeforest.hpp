#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypertopo/graph.hpp"

namespace hypertopo {

// ---------------------------------------------------------------------------
// vertex surgery

inline Graph vertex_split(const Graph& g, int u,
                          const std::pair<std::vector<int>, std::vector<int>>& parts) {
    auto nb = neighbors(g, u);
    if (nb.size() < 2) throw std::invalid_argument("vertex_split: degree below 2");
    std::vector<int> a = parts.first, b = parts.second;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.empty() || b.empty())
        throw std::invalid_argument("vertex_split: both parts must be nonempty");
    std::vector<int> merged;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    if (merged != nb)
        throw std::invalid_argument("vertex_split: parts must partition the neighborhood");

    const int u2 = g.n;  // the second copy gets a fresh index
    std::vector<std::pair<int, int>> es;
    for (auto [x, y] : g.edges) {
        if (x != u && y != u) {
            es.emplace_back(x, y);
            continue;
        }
        int other = x == u ? y : x;
        bool to_first = std::binary_search(a.begin(), a.end(), other);
        es.emplace_back(to_first ? u : u2, other);
    }
    return make_graph(g.n + 1, std::move(es));
}

inline Graph vertex_coincide(const Graph& g, int a, int b) {
    if (a == b) throw std::invalid_argument("vertex_coincide: identical vertices");
    if (has_edge(g, a, b)) throw std::invalid_argument("vertex_coincide: adjacent vertices");
    auto na = neighbors(g, a), nb = neighbors(g, b);
    std::vector<int> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("vertex_coincide: common neighbor " +
                                    std::to_string(common.front()));
    if (a > b) std::swap(a, b);
    // drop b, reroute its edges to a, shift indices above b down
    std::vector<std::pair<int, int>> es;
    auto remap = [&](int v) {
        if (v == b) return a;
        return v > b ? v - 1 : v;
    };
    for (auto [x, y] : g.edges) es.emplace_back(remap(x), remap(y));
    return make_graph(g.n - 1, std::move(es));
}

inline Graph adding_edge_removing(const Graph& t, std::pair<int, int> add,
                                  std::pair<int, int> remove) {
    if (!is_tree(t)) throw std::invalid_argument("adding_edge_removing: input is not a tree");
    if (has_edge(t, add.first, add.second))
        throw std::invalid_argument("adding_edge_removing: edge to add already present");
    if (!has_edge(t, remove.first, remove.second))
        throw std::invalid_argument("adding_edge_removing: edge to remove not present");
    std::vector<std::pair<int, int>> es;
    if (remove.first > remove.second) std::swap(remove.first, remove.second);
    for (auto e : t.edges)
        if (e != remove) es.push_back(e);
    es.push_back(add);
    Graph out = make_graph(t.n, std::move(es));
    if (!is_tree(out))
        throw std::invalid_argument("adding_edge_removing: result is not a tree");
    return out;
}

// ---------------------------------------------------------------------------
// counting

// Matrix-tree determinant with fraction-free Bareiss elimination
inline mpz_class spanning_tree_count(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("spanning_tree_count: more than 64 vertices");
    if (g.n <= 1) return 1;
    if (!is_connected(g)) return 0;
    const int n = g.n - 1;  // any principal minor of the Laplacian
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = degree(g, v);
    for (auto [u, v] : g.edges) {
        if (u < n && v < n) {
            m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= 1;
            m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
        }
    }
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) { swap_row = r; break; }
            if (swap_row == -1) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    mpz_class det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign == 1 ? det : mpz_class(-det);
}

// Takacs' closed form for the number of labeled forests on n vertices
inline mpz_class forest_count(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("forest_count: need 1 <= n <= 30");
    mpq_class total = 0;
    mpz_class np1 = n + 1;
    for (int k = 0; 2 * k <= n; ++k) {
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), np1.get_mpz_t(), static_cast<unsigned>(n - 2 * k));
        num *= (2 * k + 1);
        mpz_class den = 1;
        mpz_class fact_k, fact_n2k;
        mpz_fac_ui(fact_k.get_mpz_t(), static_cast<unsigned>(k));
        mpz_fac_ui(fact_n2k.get_mpz_t(), static_cast<unsigned>(n - 2 * k));
        mpz_class two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned>(k));
        den = two_k * fact_k * fact_n2k;
        mpq_class term(num, den);
        term.canonicalize();
        if (k % 2 == 1) term = -term;
        total += term;
    }
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned>(n));
    total *= mpq_class(nfact, np1);
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("forest_count: sum did not evaluate to an integer");
    return total.get_num();
}

// k = 0 term of the same sum, for the Cayley specialization
inline mpz_class forest_count_leading_term(int n) {
    mpz_class np1 = n + 1;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), np1.get_mpz_t(), static_cast<unsigned>(n - 1));
    return out;
}

// decode a Pruefer sequence over [0, n) into a labeled tree
inline Graph prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> es;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) { leaf = v; break; }
        used[static_cast<std::size_t>(leaf)] = true;
        --deg[static_cast<std::size_t>(leaf)];
        --deg[static_cast<std::size_t>(x)];
        es.emplace_back(leaf, x);
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) rest.push_back(v);
    es.emplace_back(rest[0], rest[1]);
    return make_graph(n, std::move(es));
}

}  // namespace hypertopo
