#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ternvec/enumerate.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/generate.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/search.hpp"
#include "ternvec/structure.hpp"
#include "ternvec/transform.hpp"

using namespace ternvec;
using Kind = ComponentClass::Kind;

namespace {

Vertex first_with(const Certificate& c, int value) {
    const auto v = c.valuation().values();
    return static_cast<Vertex>(std::find(v.begin(), v.end(), value) - v.begin());
}

std::vector<Kind> kinds(const Decomposition& d) {
    std::vector<Kind> out;
    for (const Component& c : d.components) out.push_back(c.cls.kind);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("equal links: joining two P2") {
    // Both halves read (1,-1); vertices 1 and 3 carry -1.
    const Certificate two = disjoint_union(Certificate(path_graph(2), {1, -1}), Certificate(path_graph(2), {1, -1}));
    const Certificate p4 = add_equal_link(two, 1, 3);
    CHECK(p4.lambda() == 2);
    CHECK(p4.graph() == Graph::from_edges(4, {{0, 1}, {1, 3}, {2, 3}}));
    CHECK(p4.valuation().to_string() == "+-+-");
    CHECK(remove_equal_link(p4, 1, 3).graph() == two.graph());
    CHECK_THROWS_AS((void)add_equal_link(two, 0, 3), ContractViolation);     // unequal
    CHECK_THROWS_AS((void)add_equal_link(p4, 1, 3), ContractViolation);      // present
    CHECK_THROWS_AS((void)remove_equal_link(p4, 0, 3), ContractViolation);   // absent
}

TEST_CASE("equal links: chord in C8") {
    const Certificate c8 = gen_cycle(CycleKind::C2k, 4);
    const Certificate chord = add_equal_link(c8, 0, 2);
    CHECK(chord.lambda() == 4);
    CHECK(classify_family(chord.graph()).has(FamilyKind::Bicyclic));
}

TEST_CASE("soft extension") {
    const Certificate s5 = gen_soft_star(2);
    const SoftJoin join{0, 0};
    const Certificate tree = extend_soft(s5, path_graph(2), std::span(&join, 1));
    CHECK(tree.graph().order() == 7);
    CHECK(tree.lambda() == 1);
    CHECK(classify_family(tree.graph()).has(FamilyKind::Tree));

    const Certificate c6 = gen_cycle(CycleKind::C3k, 2);
    const SoftJoin pendant{0, first_with(c6, 0)};
    const Certificate leafy = extend_soft(c6, Graph(1), std::span(&pendant, 1));
    CHECK(leafy.lambda() == 3);
    CHECK(classify_family(leafy.graph()).has(FamilyKind::Unicyclic));

    CHECK(extend_soft(c6, Graph(0), {}).graph() == c6.graph());

    const SoftJoin bad{0, first_with(c6, 1)};
    CHECK_THROWS_AS((void)extend_soft(c6, Graph(1), std::span(&bad, 1)), ContractViolation);
}

TEST_CASE("disjoint union needs one eigenvalue") {
    CHECK_THROWS_AS((void)disjoint_union(gen_cycle(CycleKind::C3k, 1), gen_cycle(CycleKind::C4k, 1)), ContractViolation);
}

TEST_CASE("decompose: worked examples") {
    const Decomposition p4 = decompose(Certificate(path_graph(4), {-1, 1, 1, -1}));
    CHECK(kinds(p4) == std::vector<Kind>{Kind::ChainP2, Kind::ChainP2});
    CHECK(p4.equal_links == std::vector<Edge>{{1, 2}});

    // C8 and C4 glued at a soft vertex, a P2 hung on by an equal link, and an
    // all-zero C5 on a soft vertex.
    const CactusGlue glue{};
    Certificate fig = gen_cactus(2, std::vector<int>{8, 4}, std::span(&glue, 1));
    const Vertex plus = first_with(fig, 1);
    const Vertex soft = first_with(fig, 0);
    const std::size_t n = fig.graph().order();
    fig = disjoint_union(fig, Certificate(path_graph(2), {1, -1}));
    fig = add_equal_link(fig, plus, static_cast<Vertex>(n));
    const SoftJoin join{0, soft};
    fig = extend_soft(fig, cycle_graph(5), std::span(&join, 1));
    CHECK(fig.lambda() == 2);
    const Decomposition d = decompose(fig);
    // Zero-zero edges are equal links too: the C5 falls apart into five zeros.
    CHECK(kinds(d) == std::vector<Kind>{Kind::IsolatedZeros, Kind::IsolatedZeros, Kind::IsolatedZeros,
                                        Kind::IsolatedZeros, Kind::IsolatedZeros, Kind::ChainP2, Kind::B1});
    CHECK(d.equal_links.size() == 7);
    for (const Component& c : d.components) {
        if (c.cls.kind == Kind::B1) CHECK(c.cls.params == std::vector<int>{4, 8});
    }

    // No equal links: a single component.
    const Decomposition single = decompose(gen_cycle(CycleKind::C3k, 3));
    REQUIRE(single.components.size() == 1);
    CHECK(single.components[0].cls.to_string() == "Cycle3k(3)");
    CHECK(single.components[0].cls.lambda == 3);
}

TEST_CASE("decompose: reassembly and component eigenvalues on random certificates") {
    std::mt19937_64 rng(23);
    std::size_t seen = 0;
    for (int t = 0; t < 600; ++t) {
        const Graph g = oracle::random_graph(2 + rng() % 9, 0.3, rng);
        for (const Certificate& c : full_spectrum(g).certificates()) {
            const Decomposition d = decompose(c);
            REQUIRE(d.reassemble() == g);
            CHECK(d.order() == g.order());
            for (const Component& comp : d.components) {
                CHECK(equal_links(comp.graph, comp.values).empty());
                if (comp.cls.kind == Kind::IsolatedZeros) continue;
                CHECK(verify(comp.graph, Valuation(comp.values)) == c.lambda());
                if (comp.cls.lambda) CHECK(*comp.cls.lambda == c.lambda());
            }
            ++seen;
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("decompose: family members never leave an unclassified component (n <= 6)") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_family_member(n, [&](const Graph& g) {
            for (const Certificate& c : brute_force(g).certificates()) {
                for (const Component& comp : decompose(c).components) {
                    if (comp.cls.kind == Kind::Other) FAIL_CHECK(to_graph6(g) << " " << c.valuation().to_string());
                }
            }
        });
    }
}

TEST_CASE("leaf graphs: an equal-link-free certificate means P2 or a soft-centred star (connected, n <= 7)") {
    for (std::size_t n = 2; n <= 7; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            bool leaf = false;
            for (Vertex v = 0; v < n; ++v) leaf = leaf || g.degree(v) == 1;
            if (!leaf) return;
            for (const Certificate& c : brute_force(g).certificates()) {
                if (!equal_links(c).empty()) continue;
                const Kind k = decompose(c).components.at(0).cls.kind;
                if (k != Kind::ChainP2 && k != Kind::SoftStar) FAIL_CHECK(to_graph6(g) << " " << c.valuation().to_string());
            }
        });
    }
}

TEST_CASE("classify_component catalogue") {
    const auto cls = [](const Certificate& c) { return classify_component(c.graph(), c.valuation().values()).to_string(); };
    CHECK(cls(gen_p2_tree(1)) == "ChainP2");
    CHECK(cls(gen_soft_star(3)) == "SoftStar(3)");
    CHECK(cls(gen_cycle(CycleKind::C4k, 2)) == "Cycle4k(2)");
    CHECK(cls(gen_cycle(CycleKind::C2k, 3)) == "EvenCycle(3)");
    CHECK(cls(gen_diamond()) == "B3(3,2,3)");
    CHECK(cls(gen_B3(std::vector<int>{9, 6, 3})) == "B3(9,6,3)");
    CHECK(cls(gen_B1(6, 6, 3)) == "B1(6,6)");
    CHECK(cls(gen_B3(std::vector<int>{3, 3, 3, 3})) == "GeneralizedTheta(3,3,3,3)");
    const std::vector<int> lengths{3, 6, 3};
    const std::vector<CactusGlue> glues{{0, 1, 1}, {1, 4, 1}};
    CHECK(cls(gen_cactus(3, lengths, glues)) == "GluedCycles(6,3,3)");
}
