#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixture_data.hpp"
#include "hypertopo/generators.hpp"
#include "hypertopo/groups.hpp"
#include "random_instances.hpp"

using namespace hypertopo;

TEST_CASE("shift_set reproduces the listed shifts") {
    auto listings = fixtures::fix_b_shift_listing();
    auto e11 = fixtures::fix_b_e11().edges;
    for (int i = 2; i <= 10; ++i) {
        INFO("shift " << i - 1);
        CHECK(shift_set(e11, i - 1, 10) == listings[static_cast<std::size_t>(i - 1)]);
    }
    CHECK(shift_set(e11, 10, 10) == e11);

    auto cur = e11;
    for (int step = 0; step < 10; ++step) cur = shift_set(cur, 1, 10);
    CHECK(cur == e11);

    CHECK_THROWS_AS(shift_set(make_family({{11}}), 1, 10), std::invalid_argument);
}

TEST_CASE("combine matches both the index law and the elementwise law") {
    auto fam = generate_hypergraph_group(make_hypergraph_on(8, {{1, 2, 3, 4}}), 8);
    CHECK(combine(fam, 2, 3, 1) == 4);
    CHECK(fam.member(4) == make_family({{4, 5, 6, 7}}));

    for (int i = 1; i <= 8; ++i)
        for (int k = 1; k <= 8; ++k) CHECK(combine(fam, i, k, k) == i);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            for (int k = 1; k <= 8; ++k) CHECK(combine(fam, i, j, k) == combine(fam, j, i, k));

    // the elementwise law agrees with the i+j-k index form, not the Def's
    // i+j-k-1 variant
    auto members = fam.members();
    auto member_of = [&](const HyperedgeSet& x) {
        for (int t = 0; t < 8; ++t)
            if (members[static_cast<std::size_t>(t)] == x) return t + 1;
        return 0;
    };
    bool differs_somewhere = false;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            for (int k = 1; k <= 8; ++k) {
                int lam = member_of(combine_elementwise(fam, i, j, k));
                CHECK(lam == group_law_index(i, j, k, 8, GroupLawOffset::Standard));
                if (lam != group_law_index(i, j, k, 8, GroupLawOffset::DefMinusOne))
                    differs_somewhere = true;
            }
    CHECK(differs_somewhere);
}

TEST_CASE("every-zero verification of the pinned families") {
    auto f8 = generate_hypergraph_group(make_hypergraph_on(8, {{1, 2, 3, 4}}), 8);
    CHECK(verify_every_zero(f8).pass());

    auto f11 = generate_hypergraph_group(fixtures::fix_b_e11(), 10);
    auto r11 = verify_every_zero(f11);
    CHECK(r11.pass());
    CHECK(r11.associative_exhaustive);

    auto f21 = generate_hypergraph_group(fixtures::fix_b_e21(), 10);
    CHECK(verify_every_zero(f21).pass());

    auto corrupted = f11;
    corrupted.aligned[2][0][0] = mod1(corrupted.aligned[2][0][0] + 1, 10);
    auto rc = verify_every_zero(corrupted);
    CHECK_FALSE(rc.pass());
    CHECK_FALSE(rc.closure);
    CHECK(rc.closure_witness.has_value());
}

TEST_CASE("large moduli fall back to sampled associativity") {
    auto fam = generate_hypergraph_group(make_hypergraph_on(14, {{1, 2, 3}}), 14);
    auto r = verify_every_zero(fam);
    CHECK(r.pass());
    CHECK_FALSE(r.associative_exhaustive);
    CHECK(r.period == 14);

    // a family fixed under shifting collapses to the trivial quotient
    auto fixed = generate_hypergraph_group(cyclic_k_uniform(14, 3), 14);
    auto rf = verify_every_zero(fixed);
    CHECK(rf.pass());
    CHECK(rf.period == 1);
}

TEST_CASE("generated members equal the listed shifts") {
    auto fam = generate_hypergraph_group(fixtures::fix_b_e11(), 10);
    auto listings = fixtures::fix_b_shift_listing();
    REQUIRE(fam.modulus == 10);
    for (int i = 1; i <= 10; ++i) CHECK(fam.member(i) == listings[static_cast<std::size_t>(i - 1)]);
    CHECK(fam.member(1) == fixtures::fix_b_e11().edges);

    CHECK_THROWS_AS(generate_hypergraph_group(fixtures::fix_b_e11(), 8), std::invalid_argument);
}

TEST_CASE("group tables are Latin squares for every zero") {
    for (int M = 2; M <= 12; ++M)
        for (int zero = 1; zero <= M; ++zero) {
            GroupTable t{M, zero};
            auto table = t.table();
            for (int i = 0; i < M; ++i) {
                std::vector<bool> row(static_cast<std::size_t>(M + 1), false);
                std::vector<bool> col(static_cast<std::size_t>(M + 1), false);
                for (int j = 0; j < M; ++j) {
                    CHECK_FALSE(row[static_cast<std::size_t>(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])]);
                    row[static_cast<std::size_t>(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] = true;
                    CHECK_FALSE(col[static_cast<std::size_t>(table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])]);
                    col[static_cast<std::size_t>(table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])] = true;
                }
            }
            CHECK(t.lambda_of(zero, zero) == zero);
        }
}

TEST_CASE("orbit length divides the modulus") {
    auto fam = generate_hypergraph_group(fixtures::fix_b_e11(), 10);
    auto first = fam.member(1);
    int period = 0;
    for (int i = 1; i <= 10; ++i)
        if (fam.member(i % 10 + 1) == first) {
            period = i;
            break;
        }
    CHECK(10 % period == 0);
}

TEST_CASE("power set of [1,4] partitions into the four cardinality classes") {
    auto classes = partition_power_set(4);
    auto expect = fixtures::fix_e_classes();
    REQUIRE(classes.size() == 4);
    for (int k = 0; k < 4; ++k) {
        CHECK(classes[static_cast<std::size_t>(k)].cardinality == k + 1);
        CHECK(classes[static_cast<std::size_t>(k)].members == expect[static_cast<std::size_t>(k)]);
    }

    // complements swap U_k and U_{M-k}
    for (int k = 1; k <= 3; ++k) {
        HyperedgeSet co;
        for (const auto& e : classes[static_cast<std::size_t>(k - 1)].members)
            co.push_back(edge_difference(interval(1, 4), e));
        std::sort(co.begin(), co.end());
        CHECK(co == classes[static_cast<std::size_t>(4 - k - 1)].members);
    }

    // classes partition the power set
    HyperedgeSet all;
    for (const auto& cls : classes)
        for (const auto& e : cls.members) all.push_back(e);
    std::sort(all.begin(), all.end());
    CHECK(all == power_set(interval(1, 4)));

    // every shift orbit is an every-zero group and stays inside its class
    for (const auto& cls : classes)
        for (const auto& orbit : cls.orbits) {
            CHECK(verify_every_zero(orbit).pass());
            for (int i = 1; i <= orbit.modulus; ++i)
                for (const auto& e : orbit.member(i))
                    CHECK(std::binary_search(cls.members.begin(), cls.members.end(), e));
        }

    // the {1,3} orbit has period two
    const auto& u2 = classes[1];
    bool found_period_two = false;
    for (const auto& orbit : u2.orbits)
        if (orbit.member(1) == make_family({{1, 3}}) && orbit.member(3) == orbit.member(1) &&
            orbit.member(2) == make_family({{2, 4}}))
            found_period_two = true;
    CHECK(found_period_two);
}

TEST_CASE("fixed point checks") {
    CHECK(fixed_point_check(fixtures::fix_b_e21(), Transform::Complement));
    CHECK_FALSE(fixed_point_check(fixtures::fix_f(6), Transform::Complement));
    CHECK(fixed_point_check(fixtures::fix_a(), Transform::Shift, 1));

    std::mt19937 rng(47u);
    for (int round = 0; round < 20; ++round) {
        auto h = testgen::random_proper_family(rng, 6);
        CHECK(fixed_point_check(fixed_point_union(h), Transform::Complement));
    }
}

TEST_CASE("set-colored graphic group") {
    SetColoredGraph g;
    g.graph = make_graph(2, {{0, 1}});
    g.vertex_labels = {make_edge({1}), make_edge({2})};
    std::map<std::pair<int, int>, Hyperedge> el;
    el[{0, 1}] = make_edge({1, 2});
    g.edge_labels = el;

    auto grp = set_colored_graph_group(g, 3);
    REQUIRE(grp.copies.size() == 3);
    CHECK(verify_graph_group(grp).pass());

    // copy i differs from copy 1 by the constant i-1 at every slot
    for (int i = 1; i <= 3; ++i)
        for (std::size_t s = 0; s < grp.aligned[0].size(); ++s)
            for (std::size_t t = 0; t < grp.aligned[0][s].size(); ++t)
                CHECK(grp.aligned[static_cast<std::size_t>(i - 1)][s][t] ==
                      mod1(grp.aligned[0][s][t] + i - 1, 3));

    auto corrupted = grp;
    corrupted.aligned[1][0][0] = mod1(corrupted.aligned[1][0][0] + 1, 3);
    CHECK_FALSE(verify_graph_group(corrupted).pass());

    SetColoredGraph bad = g;
    bad.vertex_labels[0] = make_edge({7});
    CHECK_THROWS_AS(set_colored_graph_group(bad, 3), std::invalid_argument);
}
