#pragma once

// Independent reference implementations used only by the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ternvec/graph.hpp"

namespace oracle {

using ternvec::Graph;
using ternvec::Vertex;

// Dense L*v, then the common ratio. nullopt unless v != 0 and Lv = lambda v.
inline std::optional<int> laplacian_ratio(const Graph& g, std::span<const std::int8_t> v) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> L(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        L[e.u][e.v] = L[e.v][e.u] = -1;
        ++L[e.u][e.u];
        ++L[e.v][e.v];
    }
    std::optional<int> lambda;
    for (std::size_t i = 0; i < n; ++i) {
        int row = 0;
        for (std::size_t j = 0; j < n; ++j) row += L[i][j] * v[j];
        if (v[i] == 0) {
            if (row != 0) return std::nullopt;
            continue;
        }
        const int r = row / v[i];
        if (lambda && *lambda != r) return std::nullopt;
        lambda = r;
    }
    return lambda;
}

// Held-Karp over subsets containing vertex 0.
inline bool held_karp(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) return false;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);   // bitset of end vertices
    reach[1] = 1;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        if (!(s & 1U) || reach[s] == 0) continue;
        for (Vertex v = 0; v < n; ++v) {
            if (!((reach[s] >> v) & 1U)) continue;
            for (Vertex w : g.neighbors(v)) {
                if (!((s >> w) & 1U)) reach[s | (1U << w)] |= 1U << w;
            }
        }
    }
    const std::uint32_t full = (1U << n) - 1;
    for (Vertex v = 1; v < n; ++v) {
        if (((reach[full] >> v) & 1U) && g.adjacent(v, 0)) return true;
    }
    return false;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<ternvec::Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (coin(rng)) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace oracle
