#include <random>
#include <vector>

#include "doctest.h"
#include "gpp/combinatorics.hpp"
#include "gpp/enumerator.hpp"
#include "gpp/errors.hpp"
#include "gpp/families.hpp"
#include "test_helpers.hpp"

using namespace gpp;
using gpp::testing::poly_of;
using gpp::testing::random_graph;

TEST_CASE("pairs are always in general position") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 2 + trial % 7, 0.5);
        const DistanceMatrix d = all_pairs_distances(g);
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                CHECK(is_general_position({u, v}, d).in_general_position());
            }
        }
        CHECK(is_general_position({}, d).in_general_position());
        CHECK(is_general_position({0}, d).in_general_position());
    }
}

TEST_CASE("the middle vertex of a path is a violation witness") {
    const DistanceMatrix d = all_pairs_distances(build(FamilySpec::path(3)));
    const GpWitness w = is_general_position({0, 1, 2}, d);
    REQUIRE(!w.in_general_position());
    CHECK(*w.violation == std::array<int, 3>{0, 1, 2});  // d(0,2) = d(0,1) + d(1,2)
}

TEST_CASE("alternating triples of a 6-cycle pass") {
    const DistanceMatrix d = all_pairs_distances(build(FamilySpec::cycle(6)));
    CHECK(is_general_position({0, 2, 4}, d).in_general_position());
    CHECK(is_general_position({1, 3, 5}, d).in_general_position());
    CHECK(!is_general_position({0, 1, 3}, d).in_general_position());
}

TEST_CASE("out-of-range and duplicate vertices are input errors") {
    const DistanceMatrix d = all_pairs_distances(build(FamilySpec::path(3)));
    CHECK_THROWS_AS(is_general_position({0, 7}, d), InputError);
    CHECK_THROWS_AS(is_general_position({0, -1}, d), InputError);
    CHECK_THROWS_AS(is_general_position({1, 1}, d), InputError);
}

TEST_CASE("counting on reference graphs") {
    CHECK(count_gp_sets(build(FamilySpec::complete(3))) == poly_of({1, 3, 3, 1}));
    CHECK(count_gp_sets(build(FamilySpec::path(4))) == poly_of({1, 4, 6}));
    CHECK(count_gp_sets(build(FamilySpec::cycle(6))) == poly_of({1, 6, 15, 2}));
    CHECK(count_gp_sets(build(FamilySpec::corona_of(FamilySpec::cycle(6)))) ==
          poly_of({1, 12, 66, 88, 39, 6, 1}));
    // Petersen graph, frozen from an independent brute-force run.
    CHECK(count_gp_sets(build(FamilySpec::kneser2(5))) ==
          poly_of({1, 10, 45, 90, 80, 30, 5}));
}

TEST_CASE("gp numbers") {
    CHECK(gp_number(build(FamilySpec::multipartite({8, 4}))) == 8);
    CHECK(gp_number(build(FamilySpec::kneser2(5))) == 6);
    CHECK(gp_number(build(FamilySpec::edgeless(5))) == 5);
}

TEST_CASE("maximum general position sets come out sorted") {
    const auto c6 = max_gp_sets(build(FamilySpec::cycle(6)));
    REQUIRE(c6.size() == 2);
    CHECK(c6[0] == std::vector<int>{0, 2, 4});
    CHECK(c6[1] == std::vector<int>{1, 3, 5});

    const auto k3 = max_gp_sets(build(FamilySpec::complete(3)));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == std::vector<int>{0, 1, 2});

    // K_{2,2}: both parts and all four transversals, i.e. every pair.
    const auto k22 = max_gp_sets(build(FamilySpec::multipartite({2, 2})));
    REQUIRE(k22.size() == 6);
    CHECK(k22.front() == std::vector<int>{0, 1});
    CHECK(k22.back() == std::vector<int>{2, 3});
    for (const auto& s : k22) CHECK(s.size() == 2);
}

TEST_CASE("every counted set is hereditary") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 3 + trial % 6, 0.45);
        const DistanceMatrix d = all_pairs_distances(g);
        for (const auto& top : max_gp_sets(g)) {
            for (std::uint32_t mask = 0; mask < (1u << top.size()); ++mask) {
                std::vector<int> subset;
                for (std::size_t b = 0; b < top.size(); ++b) {
                    if (mask & (1u << b)) subset.push_back(top[b]);
                }
                CHECK(is_general_position(subset, d).in_general_position());
            }
        }
    }
}

TEST_CASE("disjoint unions multiply polynomials") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph a = random_graph(rng, 2 + trial % 5, 0.5);
        const Graph b = random_graph(rng, 2 + (trial * 3) % 5, 0.3);
        CHECK(count_gp_sets(disjoint_union({a, b})) ==
              count_gp_sets(a) * count_gp_sets(b));
    }
    CHECK(count_gp_sets(disjoint_union({})) == GpPolynomial());
}

TEST_CASE("naive subset scan agrees with the pruned traversal") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 8;
        const Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
        const GpPolynomial fast = count_gp_sets(g);
        CHECK(fast == count_gp_sets_naive(g));
        CHECK(fast[0] == BigNat(1));
        CHECK(fast[1] == BigNat(static_cast<unsigned long long>(n)));
        if (n >= 2) CHECK(fast[2] == binom(n, 2));
        CHECK(!fast[fast.degree()].is_zero());
    }
}

TEST_CASE("parallel enumeration is identical to the serial reference") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = random_graph(rng, 6 + trial % 9, 0.35);
        const GpPolynomial serial = count_gp_sets_serial(g);
        for (int threads : {1, 2, 4}) {
            EnumeratorOptions opt;
            opt.threads = threads;
            CHECK(count_gp_sets(g, opt) == serial);
        }
    }
    const Graph big = build(FamilySpec::corona_of(FamilySpec::edgeless(8)));
    CHECK(count_gp_sets(big) == count_gp_sets_serial(big));
}

TEST_CASE("single-part subsets of a multipartite graph always qualify") {
    const Graph g = build(FamilySpec::multipartite({3, 4}));
    const DistanceMatrix d = all_pairs_distances(g);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < 3; ++b) {
            if (mask & (1u << b)) subset.push_back(b);
        }
        CHECK(is_general_position(subset, d).in_general_position());
    }
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < 4; ++b) {
            if (mask & (1u << b)) subset.push_back(3 + b);
        }
        CHECK(is_general_position(subset, d).in_general_position());
    }
}

TEST_CASE("vertex budget refusal") {
    EnumeratorOptions strict;
    strict.vertex_budget = 9;
    CHECK_THROWS_AS(count_gp_sets(build(FamilySpec::complete(10)), strict),
                    VertexBudgetError);
    CHECK_NOTHROW(count_gp_sets(build(FamilySpec::complete(9)), strict));
}

TEST_CASE("node budget aborts as a distinct error") {
    EnumeratorOptions tight;
    tight.node_budget = 1000;
    const Graph g = build(FamilySpec::edgeless(16));  // 2^16 sets to visit
    CHECK_THROWS_AS(count_gp_sets(g, tight), NodeBudgetError);
    CHECK_THROWS_AS(count_gp_sets_serial(g, tight), NodeBudgetError);

    // Both budget errors are refusals but keep distinct identities.
    CHECK_THROWS_AS(count_gp_sets(build(FamilySpec::edgeless(30))), VertexBudgetError);
}

TEST_CASE("empty graph counts exactly the empty set") {
    CHECK(count_gp_sets(Graph(0)) == GpPolynomial());
    CHECK(gp_number(Graph(0)) == 0);
}
