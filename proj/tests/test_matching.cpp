#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/generate.hpp"
#include "ternvec/matching.hpp"
#include "ternvec/structure.hpp"

using namespace ternvec;

namespace {

// Union of d disjoint perfect matchings between {0..h-1} and {h..2h-1}: the
// shifts i -> i + k (k < d) under random relabelings of both sides, plus a
// random sample of the shifts. d-regular and bipartite by construction.
Graph permutation_union(std::size_t h, std::size_t d, std::mt19937_64& rng) {
    const auto left = oracle::random_permutation(h, rng);
    const auto right = oracle::random_permutation(h, rng);
    auto shifts = oracle::random_permutation(h, rng);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < h; ++i) {
            edges.emplace_back(static_cast<Vertex>(left[i]), static_cast<Vertex>(h + right[(i + shifts[k]) % h]));
        }
    }
    return Graph::from_edges(2 * h, edges);
}

} // namespace

TEST_CASE("maximum matchings") {
    const std::vector<std::int8_t> p2{0, 1};
    CHECK(max_bipartite_matching(path_graph(2), p2) == std::vector<Edge>{{0, 1}});
    const auto c6 = bipartition(cycle_graph(6));
    CHECK(max_bipartite_matching(cycle_graph(6), *c6).size() == 3);
    const auto s5 = bipartition(star_graph(4));
    CHECK(max_bipartite_matching(star_graph(4), *s5).size() == 1);
    const std::vector<std::int8_t> same{0, 0};
    CHECK_THROWS_AS((void)max_bipartite_matching(path_graph(2), same), ContractViolation);
    const std::vector<std::int8_t> short_sides{0};
    CHECK_THROWS_AS((void)max_bipartite_matching(path_graph(2), short_sides), ContractViolation);
}

TEST_CASE("perfect matching partition: examples") {
    const MatchingPartition c8 = perfect_matching_partition(cycle_graph(8));
    CHECK(c8.matchings.size() == 2);
    CHECK(c8.violation(cycle_graph(8)).empty());
    const Graph k33 = complete_bipartite(3, 3);
    CHECK(perfect_matching_partition(k33).matchings.size() == 3);
    const Graph ce = gen_counterexample();
    const MatchingPartition p = perfect_matching_partition(ce);
    CHECK(p.matchings.size() == 3);
    CHECK(p.violation(ce).empty());
    CHECK_THROWS_AS((void)perfect_matching_partition(path_graph(3)), Rejected);
    CHECK_THROWS_AS((void)perfect_matching_partition(cycle_graph(5)), Rejected);
}

TEST_CASE("violation reports broken partitions") {
    const Graph c4 = cycle_graph(4);
    MatchingPartition p = perfect_matching_partition(c4);
    CHECK(p.violation(c4).empty());
    MatchingPartition dup = p;
    dup.matchings[1] = dup.matchings[0];
    CHECK_FALSE(dup.violation(c4).empty());
    MatchingPartition partial = p;
    partial.matchings.pop_back();
    CHECK_FALSE(partial.violation(c4).empty());
    MatchingPartition nonedge = p;
    nonedge.matchings[0] = {{0, 2}, {1, 3}};
    CHECK_FALSE(nonedge.violation(c4).empty());
}

TEST_CASE("partition of random regular bipartite graphs up to 40 vertices") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const std::size_t h = 1 + rng() % 20;
        const std::size_t d = 1 + rng() % std::min<std::size_t>(h, 6);
        const Graph g = permutation_union(h, d, rng);
        const MatchingPartition p = perfect_matching_partition(g);
        CHECK(p.matchings.size() == d);
        CHECK(p.violation(g).empty());
        // Two disjoint perfect matchings form a cycle cover: every degree is 2.
        if (d >= 2) {
            Graph cover(g.order());
            for (const Edge& e : p.matchings[0]) cover = cover.with_edge(e);
            for (const Edge& e : p.matchings[1]) cover = cover.with_edge(e);
            CHECK(regular_degree(cover) == 2u);
        }
    }
}

TEST_CASE("cyclomatic number of regular bipartite graphs") {
    CHECK(cyclomatic_check(6, 3) == 4);
    CHECK(cyclomatic_check(20, 3) == 11);
    CHECK(cyclomatic_check(20, 3) == cyclomatic_number(gen_counterexample()));
    CHECK_THROWS_AS((void)cyclomatic_check(5, 2), ContractViolation);
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        const std::size_t h = 2 + rng() % 15;
        const Graph g = permutation_union(h, 1 + rng() % std::min<std::size_t>(h, 5), rng);
        if (!is_connected(g)) continue;
        CHECK(cyclomatic_check(static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(*regular_degree(g))) ==
              cyclomatic_number(g));
    }
}

TEST_CASE("achievable cyclomatic numbers") {
    CHECK_FALSE(achievable_c(2).has_value());
    CHECK_FALSE(achievable_c(3).has_value());
    CHECK(achievable_c(4) == std::pair<std::int64_t, std::int64_t>{6, 3});
    CHECK(achievable_c(0) == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(achievable_c(1) == std::pair<std::int64_t, std::int64_t>{4, 2});
    CHECK(achievable_c(11) == std::pair<std::int64_t, std::int64_t>{10, 4});
}

TEST_CASE("Hamiltonicity") {
    CHECK(is_hamiltonian(cycle_graph(6)));
    CHECK_FALSE(is_hamiltonian(path_graph(6)));
    CHECK_FALSE(is_hamiltonian(path_graph(2)));
    CHECK_FALSE(is_hamiltonian(gen_counterexample()));
    CHECK(is_hamiltonian(gen_regular_bipartite(4, 1).graph()));
    CHECK(is_hamiltonian(gen_regular_bipartite(4, 2).graph()));
    CHECK_THROWS_AS((void)is_hamiltonian(cycle_graph(30)), Rejected);
}

TEST_CASE("Hamiltonicity agrees with Held-Karp") {
    std::mt19937_64 rng(47);
    int yes = 0;
    for (int t = 0; t < 3000; ++t) {
        const std::size_t n = 1 + rng() % 11;
        const Graph g = oracle::random_graph(n, 0.2 + (rng() % 60) / 100.0, rng);
        const bool truth = oracle::held_karp(g);
        yes += truth;
        if (is_hamiltonian(g) != truth) FAIL_CHECK(n);
    }
    CHECK(yes > 100);
    for (int k = 2; k <= 7; ++k) {
        for (int l = 0; l <= k - 2; ++l) CHECK(oracle::held_karp(gen_regular_bipartite(k, l).graph()));
    }
}
