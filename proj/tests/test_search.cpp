#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ternvec/enumerate.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/search.hpp"

using namespace ternvec;

namespace {

std::vector<std::string> strings(const SearchResult& r) {
    std::vector<std::string> out;
    for (const Certificate& c : r.certificates()) out.push_back(std::to_string(c.lambda()) + ":" + c.valuation().to_string());
    std::sort(out.begin(), out.end());
    return out;
}

// Counts of valid canonical vectors per lambda, straight from the dense oracle.
std::map<int, std::size_t> dense_counts(const Graph& g) {
    std::map<int, std::size_t> out;
    const std::size_t n = g.order();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<std::int8_t> v(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) v[i] = static_cast<std::int8_t>(c % 3) - 1;
        const auto first = std::find_if(v.begin(), v.end(), [](std::int8_t x) { return x != 0; });
        if (first == v.end() || *first != 1) continue;
        const auto lambda = oracle::laplacian_ratio(g, v);
        if (lambda && *lambda >= 1) ++out[*lambda];
    }
    return out;
}

} // namespace

TEST_CASE("search: small graphs") {
    const SearchResult c4 = full_spectrum(cycle_graph(4));
    const auto c4s = strings(c4);
    for (const char* want : {"2:+0-0", "2:0+0-", "4:+-+-"}) CHECK(std::count(c4s.begin(), c4s.end(), want) == 1);
    // Plus the two equal-link bivalent vectors of eigenvalue 2.
    CHECK(c4s == std::vector<std::string>{"2:++--", "2:+--+", "2:+0-0", "2:0+0-", "4:+-+-"});

    CHECK(strings(full_spectrum(path_graph(3))) == std::vector<std::string>{"1:+0-"});
    CHECK(full_spectrum(Graph(1)).empty());
    CHECK(full_spectrum(cycle_graph(5)).empty());
    CHECK(strings(full_spectrum(path_graph(2))) == std::vector<std::string>{"2:+-"});
}

TEST_CASE("csp_search: single eigenvalue") {
    CHECK(strings(csp_search(cycle_graph(6), 3)) == std::vector<std::string>{"3:+-0+-0", "3:+0-+0-", "3:0+-0+-"});
    CHECK(strings(csp_search(cycle_graph(6), 4)) == std::vector<std::string>{"4:+-+-+-"});
    // Oracle: the rotations of (1,1,0,-1,-1,0).
    CHECK(csp_search(cycle_graph(6), 1).size() == 3);
    CHECK(dense_counts(cycle_graph(6))[1] == 3);
    CHECK_THROWS_AS((void)csp_search(cycle_graph(4), 0), ContractViolation);
    CHECK_THROWS_AS((void)csp_search(cycle_graph(4), 5), ContractViolation);
}

TEST_CASE("search: diamond and K33") {
    const Graph diamond = complete_graph(4).without_edge({2, 3});
    const auto d = strings(full_spectrum(diamond));
    CHECK(std::count(d.begin(), d.end(), "4:+-00") == 1);

    const Graph k33 = complete_bipartite(3, 3);
    const auto k = strings(csp_search(k33, 6));
    CHECK(std::count(k.begin(), k.end(), "6:+++---") == 1);
}

TEST_CASE("brute_force bounds") {
    CHECK_THROWS_AS((void)brute_force(path_graph(17)), Rejected);
    CHECK_NOTHROW((void)brute_force(path_graph(10)));
}

TEST_CASE("full_spectrum, brute_force and the dense oracle agree on all connected graphs n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            const SearchResult a = full_spectrum(g);
            const SearchResult b = brute_force(g);
            if (!a.same_certificates(b)) FAIL_CHECK(to_graph6(g));
            const std::map<int, std::size_t> counts = a.lambda_counts();
            if (counts != dense_counts(g)) FAIL_CHECK(to_graph6(g));
        });
    }
}

TEST_CASE("bulk rejection matches testing every vector, all connected graphs n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            const SearchResult fast = brute_force(g);
            const SearchResult slow = brute_force(g, {.bulk_rejection = false});
            if (!fast.same_certificates(slow)) FAIL_CHECK(to_graph6(g));
        });
    }
    // Disconnected graphs too (kernel vectors are excluded either way).
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const Graph g = oracle::random_graph(2 + rng() % 8, 0.2, rng);
        CHECK(brute_force(g).same_certificates(brute_force(g, {.bulk_rejection = false})));
    }
}

TEST_CASE("pruning never loses a solution") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const Graph g = oracle::random_graph(n, 0.15 + (rng() % 60) / 100.0, rng);
        for (int lambda = 1; lambda <= static_cast<int>(n); ++lambda) {
            const SearchResult pruned = csp_search(g, lambda);
            const SearchResult plain = csp_search(g, lambda, {.prune = false});
            REQUIRE(pruned.same_certificates(plain));
            CHECK(pruned.stats().nodes <= plain.stats().nodes);
        }
    }
}

TEST_CASE("relabeling permutes certificates") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 9;
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const auto perm = oracle::random_permutation(n, rng);
        const SearchResult a = full_spectrum(g);
        const SearchResult b = full_spectrum(g.relabeled(perm));
        REQUIRE(a.lambda_counts() == b.lambda_counts());
        for (const Certificate& c : a.certificates()) {
            std::vector<std::int8_t> moved(n);
            for (std::size_t i = 0; i < n; ++i) moved[perm[i]] = c.valuation().values()[i];
            CHECK(verify(g.relabeled(perm), Valuation(moved)) == c.lambda());
        }
    }
}

TEST_CASE("parallel spectrum equals sequential") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const Graph g = oracle::random_graph(3 + rng() % 8, 0.4, rng);
        CHECK(full_spectrum(g, {.jobs = 4}).same_certificates(full_spectrum(g)));
    }
}
