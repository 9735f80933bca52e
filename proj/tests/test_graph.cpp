#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/structure.hpp"

using namespace ternvec;

TEST_CASE("graph: construction contracts") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ContractViolation);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ContractViolation);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ContractViolation);
    const Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.with_edge({2, 3}).size() == 3);
    CHECK(g.without_edge({0, 1}).size() == 1);
    CHECK_THROWS_AS((void)g.without_edge({0, 3}), ContractViolation);
    CHECK(g.disjoint_union(g).order() == 8);
    CHECK(g.disjoint_union(g).adjacent(5, 6));
}

TEST_CASE("graph6: hand-decoded examples") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

    const Graph c3 = parse_graph6("Bw");
    CHECK(c3 == cycle_graph(3));

    // 'Q' = 010010, 'c' = 100100 over (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),...
    const Graph g = parse_graph6("DQc");
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});
    CHECK(to_graph6(g) == "DQc");

    CHECK(parse_graph6(">>graph6<<Bw\n") == c3);
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6: malformed input names the offset") {
    try {
        (void)parse_graph6("A!");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS((void)parse_graph6(""), ParseError);
    CHECK_THROWS_AS((void)parse_graph6("D"), ParseError);
    CHECK_THROWS_AS((void)parse_graph6("DQcc"), ParseError);
}

TEST_CASE("graph6: round trip on random graphs up to 20 vertices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = rng() % 21;
        const Graph g = oracle::random_graph(n, (rng() % 100) / 100.0, rng);
        const std::string text = to_graph6(g);
        REQUIRE(parse_graph6(text) == g);
        CHECK(to_graph6(parse_graph6(text)) == text);
    }
    // Larger headers (n >= 63) use the long form.
    const Graph big = cycle_graph(70);
    CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("edge lists") {
    CHECK(parse_edge_list("0 1\n1 2") == path_graph(3));
    CHECK(parse_edge_list("").order() == 0);
    CHECK(parse_edge_list("# comment\nn 4\n0 1\n").order() == 4);
    CHECK_THROWS_AS((void)parse_edge_list("0 x\n"), ParseError);
    try {
        (void)parse_edge_list("0 1\n\n2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng() % 12, 0.3, rng);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
    const LabeledGraph lg = parse_labeled_edge_list("a b\nb c\n");
    CHECK(lg.graph == path_graph(3));
    CHECK(lg.labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("dot output") {
    const std::vector<std::int8_t> v{1, -1};
    const std::string dot = to_dot(path_graph(2), std::span<const std::int8_t>(v));
    CHECK(dot.find("tomato") != std::string::npos);
    CHECK(dot.find("steelblue") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(to_dot(Graph(0)) == "graph G {\n}\n");
}

TEST_CASE("relabeling preserves structure") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const Graph g = oracle::random_graph(n, 0.35, rng);
        const auto perm = oracle::random_permutation(n, rng);
        const Graph h = g.relabeled(perm);
        CHECK(h.size() == g.size());
        CHECK(cyclomatic_number(h) == cyclomatic_number(g));
        CHECK(classify_family(h).mask == classify_family(g).mask);
        for (const Edge& e : g.edges()) CHECK(h.adjacent(perm[e.u], perm[e.v]));
    }
}

TEST_CASE("family classification examples") {
    const Family star = classify_family(star_graph(4));
    CHECK(star.kinds() == std::vector<FamilyKind>{FamilyKind::Tree, FamilyKind::Cactus});
    CHECK(star.cyclomatic == 0);

    const Family c6 = classify_family(cycle_graph(6));
    CHECK(c6.has(FamilyKind::Unicyclic));
    CHECK(c6.has(FamilyKind::Cactus));
    CHECK(c6.has(FamilyKind::RegularBipartite));
    CHECK(c6.regular_degree == 2u);
    CHECK(c6.cyclomatic == 1);

    const Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    const Family b = classify_family(bowtie);
    CHECK(b.has(FamilyKind::Bicyclic));
    CHECK(b.has(FamilyKind::Cactus));
    CHECK(b.cyclomatic == 2);
    CHECK(b.shape->to_string() == "B1(3,3)");

    const Graph diamond = complete_graph(4).without_edge({2, 3});
    CHECK(bicyclic_shape(diamond).to_string() == "B3(3,2,3)");

    // Two triangles joined by a path with one interior vertex.
    const Graph b2 = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    const BicyclicShape s = bicyclic_shape(b2);
    CHECK(s.type == BicyclicShape::Type::B2);
    CHECK(s.params == std::vector<int>{3, 3, 1});

    CHECK_FALSE(classify_family(Graph(2)).connected);
    CHECK(classify_family(complete_graph(4)).kinds() == std::vector<FamilyKind>{FamilyKind::General});
}

TEST_CASE("blocks and cactus test") {
    const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    const auto blocks = biconnected_blocks(g);
    CHECK(blocks.size() == 3);
    CHECK(is_cactus(g));
    CHECK_FALSE(is_cactus(complete_graph(4)));
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
}
