#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypertopo/core.hpp"
#include "hypertopo/intersected.hpp"

namespace hypertopo {

// residues 1..M, with 0 wrapped back to M
inline int mod1(long long x, int M) {
    long long r = x % M;
    if (r <= 0) r += M;
    return static_cast<int>(r);
}

inline HyperedgeSet shift_set(const HyperedgeSet& family, int r, int M) {
    HyperedgeSet out;
    for (const auto& e : family) {
        Hyperedge img;
        for (int x : e) {
            if (x < 1 || x > M)
                throw std::invalid_argument("shift_set: element outside [1, M]");
            img.push_back(mod1(x + r, M));
        }
        out.push_back(make_edge(std::move(img)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// A shift family stores the M members in aligned form: member i, edge s,
// position t holds base[s][t] shifted by i-1. Canonical views are derived.
struct ShiftFamily {
    int modulus = 0;
    std::vector<std::vector<std::vector<int>>> aligned;  // M x edges x positions

    HyperedgeSet member(int i) const {  // 1-based
        HyperedgeSet out;
        for (const auto& e : aligned[static_cast<std::size_t>(i - 1)]) {
            Hyperedge c = e;
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<HyperedgeSet> members() const {
        std::vector<HyperedgeSet> out;
        for (int i = 1; i <= modulus; ++i) out.push_back(member(i));
        return out;
    }
};

inline ShiftFamily generate_hypergraph_group(const Hypergraph& seed, int N) {
    for (const auto& e : seed.edges)
        for (int x : e)
            if (x < 1 || x > N)
                throw std::invalid_argument("generate_hypergraph_group: seed outside [1, N]");
    ShiftFamily fam;
    fam.modulus = N;
    fam.aligned.resize(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) {
        auto& member = fam.aligned[static_cast<std::size_t>(i - 1)];
        for (const auto& e : seed.edges) {
            std::vector<int> img;
            for (int x : e) img.push_back(mod1(x + (i - 1), N));
            member.push_back(std::move(img));
        }
    }
    return fam;
}

enum class GroupLawOffset { Standard, DefMinusOne };

// index form of the finite-module addition; Standard matches the elementwise law
inline int group_law_index(int i, int j, int k, int M,
                           GroupLawOffset offset = GroupLawOffset::Standard) {
    long long lam = static_cast<long long>(i) + j - k;
    if (offset == GroupLawOffset::DefMinusOne) lam -= 1;
    return mod1(lam, M);
}

// elementwise member_i [+] member_j [-] member_k, canonicalized
inline HyperedgeSet combine_elementwise(const ShiftFamily& fam, int i, int j, int k) {
    const int M = fam.modulus;
    const auto& a = fam.aligned[static_cast<std::size_t>(i - 1)];
    const auto& b = fam.aligned[static_cast<std::size_t>(j - 1)];
    const auto& c = fam.aligned[static_cast<std::size_t>(k - 1)];
    HyperedgeSet out;
    for (std::size_t s = 0; s < a.size(); ++s) {
        Hyperedge e;
        for (std::size_t t = 0; t < a[s].size(); ++t)
            e.push_back(mod1(static_cast<long long>(a[s][t]) + b[s][t] - c[s][t], M));
        out.push_back(make_edge(std::move(e)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int combine(const ShiftFamily& fam, int i, int j, int k) {
    const int M = fam.modulus;
    if (i < 1 || j < 1 || k < 1 || i > M || j > M || k > M)
        throw std::out_of_range("combine: member index outside [1, M]");
    const int lam = group_law_index(i, j, k, M);
    if (combine_elementwise(fam, i, j, k) != fam.member(lam))
        throw std::logic_error("combine: elementwise result is not the member i+j-k (mod M)");
    return lam;
}

struct GroupTable {
    int modulus = 0;
    int zero_index = 1;  // 1-based
    int lambda_of(int i, int j) const { return group_law_index(i, j, zero_index, modulus); }
    std::vector<std::vector<int>> table() const {
        std::vector<std::vector<int>> t(static_cast<std::size_t>(modulus),
                                        std::vector<int>(static_cast<std::size_t>(modulus)));
        for (int i = 1; i <= modulus; ++i)
            for (int j = 1; j <= modulus; ++j)
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = lambda_of(i, j);
        return t;
    }
};

struct EveryZeroReport {
    bool profile = true;        // members share the cardinality profile
    int period = 0;             // distinct members; divides the modulus
    bool closure = true;
    std::optional<std::array<int, 3>> closure_witness;
    bool latin = true;          // row/column maps bijective for every zero
    bool zero = true;           // i [+_k] k == i
    bool inverse = true;
    bool associative = true;
    bool associative_exhaustive = true;
    bool commutative = true;
    bool pass() const {
        return profile && closure && latin && zero && inverse && associative && commutative;
    }
};

inline EveryZeroReport verify_every_zero(const ShiftFamily& fam,
                                         unsigned sample_seed = 0x5eedu) {
    const int modulus = fam.modulus;
    if (modulus > 64) throw std::invalid_argument("verify_every_zero: modulus larger than 64");
    EveryZeroReport r;
    if (fam.aligned.size() != static_cast<std::size_t>(modulus)) {
        r.profile = false;
        return r;
    }
    for (const auto& member : fam.aligned) {
        if (member.size() != fam.aligned[0].size()) r.profile = false;
        for (std::size_t s = 0; r.profile && s < member.size(); ++s)
            if (member[s].size() != fam.aligned[0][s].size()) r.profile = false;
    }
    if (!r.profile) return r;

    std::vector<HyperedgeSet> views = fam.members();

    // shift orbits may close early; the group then lives on the quotient
    int M = modulus;
    for (int L = 1; L < modulus; ++L) {
        if (modulus % L != 0) continue;
        bool repeats = true;
        for (int i = 0; i < modulus && repeats; ++i)
            if (views[static_cast<std::size_t>(i)] != views[static_cast<std::size_t>(i % L)])
                repeats = false;
        if (repeats) {
            M = L;
            break;
        }
    }
    r.period = M;

    auto member_of = [&](const HyperedgeSet& x) -> int {
        for (int t = 0; t < M; ++t)
            if (views[static_cast<std::size_t>(t)] == x) return t + 1;
        return 0;
    };

    for (int k = 1; k <= M && r.closure; ++k) {
        std::vector<std::vector<int>> got(static_cast<std::size_t>(M),
                                          std::vector<int>(static_cast<std::size_t>(M), 0));
        for (int i = 1; i <= M && r.closure; ++i)
            for (int j = 1; j <= M; ++j) {
                int lam = member_of(combine_elementwise(fam, i, j, k));
                if (lam == 0) {
                    r.closure = false;
                    r.closure_witness = {i, j, k};
                    break;
                }
                got[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = lam;
            }
        if (!r.closure) break;
        for (int i = 0; i < M; ++i) {
            std::vector<bool> seen_row(static_cast<std::size_t>(M + 1), false);
            std::vector<bool> seen_col(static_cast<std::size_t>(M + 1), false);
            for (int j = 0; j < M; ++j) {
                if (seen_row[static_cast<std::size_t>(got[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])]) r.latin = false;
                seen_row[static_cast<std::size_t>(got[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] = true;
                if (seen_col[static_cast<std::size_t>(got[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])]) r.latin = false;
                seen_col[static_cast<std::size_t>(got[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])] = true;
            }
        }
        for (int i = 1; i <= M; ++i) {
            if (got[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] != i) r.zero = false;
            bool has_inverse = false;
            for (int b = 1; b <= M; ++b)
                if (got[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b - 1)] == k) has_inverse = true;
            if (!has_inverse) r.inverse = false;
        }
        for (int i = 1; i <= M; ++i)
            for (int j = 1; j <= M; ++j)
                if (got[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                    got[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)])
                    r.commutative = false;

        auto op = [&](int i, int j) { return got[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
        if (M <= 12) {
            for (int i = 1; i <= M; ++i)
                for (int j = 1; j <= M; ++j)
                    for (int l = 1; l <= M; ++l)
                        if (op(op(i, j), l) != op(i, op(j, l))) r.associative = false;
        } else {
            r.associative_exhaustive = false;
            std::mt19937 rng(sample_seed + static_cast<unsigned>(k));
            std::uniform_int_distribution<int> pick(1, M);
            for (int t = 0; t < 10000; ++t) {
                int i = pick(rng), j = pick(rng), l = pick(rng);
                if (op(op(i, j), l) != op(i, op(j, l))) r.associative = false;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// power-set partition by cardinality; each class splits into shift orbits

struct PowerClass {
    int cardinality = 0;
    HyperedgeSet members;
    std::vector<ShiftFamily> orbits;
};

inline std::vector<PowerClass> partition_power_set(int M) {
    if (M > 10) throw std::invalid_argument("partition_power_set: M larger than 10");
    HyperedgeSet all = power_set(interval(1, M));
    std::vector<PowerClass> classes(static_cast<std::size_t>(M));
    for (int k = 1; k <= M; ++k) classes[static_cast<std::size_t>(k - 1)].cardinality = k;
    for (const auto& e : all)
        classes[e.size() - 1].members.push_back(e);

    for (auto& cls : classes) {
        std::vector<bool> seen(cls.members.size(), false);
        for (std::size_t s = 0; s < cls.members.size(); ++s) {
            if (seen[s]) continue;
            ShiftFamily orbit;
            orbit.modulus = M;
            for (int r = 0; r < M; ++r) {
                std::vector<int> img;
                for (int x : cls.members[s]) img.push_back(mod1(x + r, M));
                Hyperedge sorted_img = make_edge(img);
                auto it = std::lower_bound(cls.members.begin(), cls.members.end(), sorted_img);
                seen[static_cast<std::size_t>(it - cls.members.begin())] = true;
                orbit.aligned.push_back({std::move(img)});
            }
            cls.orbits.push_back(std::move(orbit));
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// fixed points

enum class Transform { Complement, Shift };

inline bool fixed_point_check(const Hypergraph& h, Transform tag, int shift_r = 0) {
    if (tag == Transform::Complement) {
        return complement_set(h).edges == h.edges;
    }
    const int M = h.ground.empty() ? 1 : h.ground.back();
    return shift_set(h.edges, shift_r, M) == h.edges;
}

// ---------------------------------------------------------------------------
// every-zero set-colored graphic group: M label-shifted copies of one graph

struct SetColoredGraphGroup {
    int modulus = 0;
    SetColoredGraph base;
    // aligned label slots: one row per colored element, in a fixed element order
    std::vector<std::vector<std::vector<int>>> aligned;  // M x elements x slots
    std::vector<SetColoredGraph> copies;
};

struct GraphGroupReport {
    bool law_holds = true;  // b_i + b_j - b_k = b_lambda at every slot
    bool shifts_consistent = true;
    std::optional<std::array<int, 3>> witness;
    bool pass() const { return law_holds && shifts_consistent; }
};

inline SetColoredGraphGroup set_colored_graph_group(const SetColoredGraph& g, int M) {
    SetColoredGraphGroup grp;
    grp.modulus = M;
    grp.base = g;

    std::vector<std::vector<int>> base_slots;
    for (const auto& l : g.vertex_labels) base_slots.push_back(l);
    if (g.edge_labels)
        for (const auto& [k, l] : *g.edge_labels) base_slots.push_back(l);
    for (const auto& row : base_slots)
        for (int x : row)
            if (x < 1 || x > M)
                throw std::invalid_argument("set_colored_graph_group: label outside [1, M]");

    for (int i = 1; i <= M; ++i) {
        std::vector<std::vector<int>> rows;
        for (const auto& row : base_slots) {
            std::vector<int> shifted;
            for (int x : row) shifted.push_back(mod1(x + (i - 1), M));
            rows.push_back(std::move(shifted));
        }
        grp.aligned.push_back(std::move(rows));

        SetColoredGraph copy;
        copy.graph = g.graph;
        for (const auto& l : g.vertex_labels) {
            Hyperedge img;
            for (int x : l) img.push_back(mod1(x + (i - 1), M));
            copy.vertex_labels.push_back(make_edge(std::move(img)));
        }
        if (g.edge_labels) {
            std::map<std::pair<int, int>, Hyperedge> el;
            for (const auto& [k, l] : *g.edge_labels) {
                Hyperedge img;
                for (int x : l) img.push_back(mod1(x + (i - 1), M));
                el[k] = make_edge(std::move(img));
            }
            copy.edge_labels = std::move(el);
        }
        grp.copies.push_back(std::move(copy));
    }
    return grp;
}

inline GraphGroupReport verify_graph_group(const SetColoredGraphGroup& grp) {
    GraphGroupReport r;
    const int M = grp.modulus;
    for (int i = 1; i <= M && r.shifts_consistent; ++i)
        for (std::size_t s = 0; s < grp.aligned[0].size(); ++s)
            for (std::size_t t = 0; t < grp.aligned[0][s].size(); ++t)
                if (grp.aligned[static_cast<std::size_t>(i - 1)][s][t] !=
                    mod1(grp.aligned[0][s][t] + (i - 1), M)) {
                    r.shifts_consistent = false;
                    break;
                }
    for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= M; ++j)
            for (int k = 1; k <= M; ++k) {
                int lam = group_law_index(i, j, k, M);
                for (std::size_t s = 0; s < grp.aligned[0].size(); ++s)
                    for (std::size_t t = 0; t < grp.aligned[0][s].size(); ++t) {
                        int want = grp.aligned[static_cast<std::size_t>(lam - 1)][s][t];
                        int got = mod1(static_cast<long long>(grp.aligned[static_cast<std::size_t>(i - 1)][s][t]) +
                                           grp.aligned[static_cast<std::size_t>(j - 1)][s][t] -
                                           grp.aligned[static_cast<std::size_t>(k - 1)][s][t],
                                       M);
                        if (want != got) {
                            r.law_holds = false;
                            if (!r.witness) r.witness = {i, j, k};
                        }
                    }
            }
    return r;
}

}  // namespace hypertopo
