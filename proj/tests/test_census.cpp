#include <doctest.h>

#include <sstream>

#include "ternvec/census.hpp"
#include "ternvec/enumerate.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/structure.hpp"

using namespace ternvec;

namespace {

std::vector<std::string> rows(const GraphSource& source, const CensusOptions& options, CensusSummary* summary = nullptr) {
    std::vector<std::string> out;
    const CensusSummary s = run_census(source, options, [&](const CensusRow& r) {
        out.push_back(r.to_jsonl(false));
        return true;
    });
    if (summary) *summary = s;
    return out;
}

std::size_t count(const std::function<void(const std::function<void(const Graph&)>&)>& each) {
    std::size_t k = 0;
    each([&](const Graph&) { ++k; });
    return k;
}

} // namespace

TEST_CASE("enumerators: known counts") {
    // Connected labeled graphs: 1, 1, 4, 38, 728, 26704 (OEIS A001187).
    const std::size_t connected[] = {1, 1, 4, 38, 728, 26704};
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(count([n](const auto& f) { for_each_connected_graph(n, f); }) == connected[n - 1]);
    }
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t expect = 1;
        for (std::size_t i = 2; i < n; ++i) expect *= n;   // Cayley: n^(n-2)
        CHECK(count([n](const auto& f) { for_each_tree(n, f); }) == expect);
    }
    // Family members equal the filtered connected graphs.
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t filtered = 0;
        for_each_connected_graph(n, [&](const Graph& g) {
            const Family f = classify_family(g);
            if (f.has(FamilyKind::Tree) || f.has(FamilyKind::Unicyclic) || f.has(FamilyKind::Bicyclic) ||
                f.has(FamilyKind::Cactus)) {
                ++filtered;
            }
        });
        CHECK(count([n](const auto& f) { for_each_family_member(n, f); }) == filtered);
    }
}

TEST_CASE("enumerators: masks and Pruefer codes") {
    CHECK(graph_from_mask(3, 0b111) == cycle_graph(3));
    CHECK(mask_connected(3, 0b011));
    CHECK_FALSE(mask_connected(3, 0b001));
    CHECK_FALSE(mask_is_cactus(4, 0b011111));      // diamond: two triangles share an edge
    CHECK(mask_is_cactus(5, 0b1001001111));         // bowtie
    const std::vector<Vertex> code{3, 3};
    CHECK(tree_from_pruefer(code) == star_graph(3).relabeled(std::vector<Vertex>{3, 0, 1, 2}));
    CHECK_THROWS_AS((void)graph_from_mask(12, 0), ContractViolation);
}

TEST_CASE("census: deterministic and independent of the worker count") {
    CensusOptions one;
    one.oracle_check = true;
    one.batch = 97;
    CensusOptions many = one;
    many.jobs = 4;
    CensusSummary a;
    CensusSummary b;
    const auto r1 = rows(enumerator_source("connected:5"), one, &a);
    const auto r2 = rows(enumerator_source("connected:5"), many, &b);
    CHECK(r1 == r2);
    CHECK(a.graphs == 1 + 1 + 4 + 38 + 728);
    CHECK(a.problems == 0);
    CHECK(b.problems == 0);
}

TEST_CASE("census: families mode checks the claims") {
    CensusOptions o;
    o.families = true;
    CensusSummary s;
    const auto r = rows(enumerator_source("families:6"), o, &s);
    CHECK(s.problems == 0);
    CHECK(s.graphs == r.size());
    CHECK(r.size() == count([](const auto& f) {
              for (std::size_t n = 1; n <= 6; ++n) for_each_family_member(n, f);
          }));
    // Non-members are dropped.
    CHECK_FALSE(census_row(complete_graph(4), o).has_value());
}

TEST_CASE("census: trees carry lambda 2 when bivalent and 1 when trivalent") {
    CensusOptions o;
    run_census(enumerator_source("trees:7"), o, [&](const CensusRow& r) {
        for (const CensusEntry& e : r.entries) {
            CHECK(e.lambda == (e.valence == Valence::Bivalent ? 2 : 1));
        }
        CHECK(r.problems.empty());
        return true;
    });
}

TEST_CASE("census: graph6 streams") {
    std::istringstream in("A_\n\nbad!\nBw\r\n");
    std::vector<std::string> skipped;
    CensusOptions o;
    o.log_skip = [&](const std::string& why) { skipped.push_back(why); };
    CensusSummary s;
    const auto r = rows(graph6_source(in), o, &s);
    CHECK(r.size() == 2);
    CHECK(s.skipped == 1);
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0].rfind("line 3, byte", 0) == 0);

    std::istringstream empty("");
    CensusSummary e;
    CHECK(rows(graph6_source(empty), {}, &e).empty());
    CHECK(e.graphs == 0);
    CHECK(e.skipped == 0);
}

TEST_CASE("census: rows") {
    const auto row = census_row(cycle_graph(12), {});
    REQUIRE(row.has_value());
    CHECK(row->to_csv(false) == "0," + to_graph6(cycle_graph(12)) +
                                    ",\"Unicyclic,Cactus,RegularBipartite[d=2] c=1\",1:t:3;2:b:2;2:t:2;3:t:3;4:b:1,0");
    CHECK(CensusRow::csv_header(true) == "index,graph6,families,certificates,problems,micros");
    const std::string json = row->to_jsonl(false);
    CHECK(json.find("{\"lambda\":1,\"valence\":\"trivalent\",\"count\":3") != std::string::npos);
    CHECK(json.find("micros") == std::string::npos);
}

TEST_CASE("census: sink and stop") {
    CensusOptions o;
    o.batch = 5;
    std::size_t seen = 0;
    const CensusSummary s = run_census(enumerator_source("connected:4"), o, [&](const CensusRow&) { return ++seen < 7; });
    CHECK(seen == 7);
    CHECK(s.stopped);
}

TEST_CASE("enumerator specs") {
    CHECK_THROWS_AS((void)enumerator_source("connected"), ParseError);
    CHECK_THROWS_AS((void)enumerator_source("connected:x"), ParseError);
    CHECK_THROWS_AS((void)enumerator_source("connected:12"), ParseError);
    CHECK_THROWS_AS((void)enumerator_source("cubes:3"), ParseError);
    CHECK_THROWS_AS((void)enumerator_source("random-trees:5:3"), ParseError);
    CHECK(rows(enumerator_source("random-trees:9:50:1"), {}).size() == 50);
    CHECK(rows(enumerator_source("random-trees:9:50:1"), {}) == rows(enumerator_source("random-trees:9:50:1"), {}));
}
