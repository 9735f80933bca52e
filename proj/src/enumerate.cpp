#include "ternvec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <random>
#include <vector>

#include "ternvec/errors.hpp"

namespace ternvec {

namespace {

constexpr std::size_t kMaxMaskOrder = 11;   // 55 pair bits

void check_mask_order(std::size_t n) {
    if (n > kMaxMaskOrder) throw ContractViolation("graph masks support at most 11 vertices");
}

// Neighbourhood bitsets of a mask-encoded graph.
void neighbourhoods(std::size_t n, std::uint64_t mask, std::uint32_t* adj) {
    for (std::size_t v = 0; v < n; ++v) adj[v] = 0;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1U) {
                adj[i] |= 1U << j;
                adj[j] |= 1U << i;
            }
        }
    }
}

} // namespace

std::uint64_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    check_mask_order(n);
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::from_edges(n, edges);
}

bool mask_connected(std::size_t n, std::uint64_t mask) {
    check_mask_order(n);
    if (n == 0) return false;
    std::uint32_t adj[kMaxMaskOrder];
    neighbourhoods(n, mask, adj);
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0U : (1U << n) - 1);
}

bool mask_is_cactus(std::size_t n, std::uint64_t mask) {
    if (!mask_connected(n, mask)) return false;
    std::uint32_t adj[kMaxMaskOrder];
    neighbourhoods(n, mask, adj);
    int parent[kMaxMaskOrder];
    int depth[kMaxMaskOrder];
    bool covered[kMaxMaskOrder] = {};   // tree edge from v to parent[v]
    int stack[kMaxMaskOrder];
    std::uint32_t unvisited = (n == 32 ? ~0U : (1U << n) - 1) & ~1U;
    parent[0] = -1;
    depth[0] = 0;
    int top = 0;
    stack[0] = 0;
    // Iterative DFS; a vertex stays on the stack while it has unvisited neighbours.
    while (top >= 0) {
        const int v = stack[top];
        const std::uint32_t next = adj[v] & unvisited;
        if (next == 0) {
            --top;
            continue;
        }
        const int w = std::countr_zero(next);
        unvisited &= ~(1U << w);
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack[++top] = w;
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::uint32_t nb = adj[v]; nb != 0; nb &= nb - 1) {
            const int a = std::countr_zero(nb);
            // Back edge from v up to a proper ancestor a (not the tree parent).
            if (depth[a] >= depth[v] - 1) continue;
            for (int x = static_cast<int>(v); x != a; x = parent[x]) {
                if (covered[x]) return false;
                covered[x] = true;
            }
        }
    }
    return true;
}

Graph tree_from_pruefer(std::span<const Vertex> seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<int> degree(n, 1);
    for (Vertex x : seq) {
        if (x >= n) throw ContractViolation("tree_from_pruefer: label out of range");
        ++degree[x];
    }
    // Smallest current leaf via a min-heap.
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    for (Vertex x : seq) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n <= 1) return Graph(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> label(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> seq(n - 2);
    for (Vertex& x : seq) x = label(rng);
    return tree_from_pruefer(seq);
}

void for_each_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n == 0) return;
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
        visit(tree_from_pruefer(seq));
        // Odometer increment in base n.
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
    check_mask_order(n);
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (mask_connected(n, mask)) visit(graph_from_mask(n, mask));
    }
}

void for_each_connected_graph_with_edges(std::size_t n, std::size_t m,
                                         const std::function<void(const Graph&)>& visit) {
    check_mask_order(n);
    const std::uint64_t bits = pair_count(n);
    if (m > bits) return;
    if (m == 0) {
        if (n == 1) visit(Graph(1));
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << bits;
    for (std::uint64_t mask = (std::uint64_t{1} << m) - 1; mask < limit;) {
        if (mask_connected(n, mask)) visit(graph_from_mask(n, mask));
        // Gosper's hack: next larger integer with the same popcount.
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

void for_each_family_member(std::size_t n, const std::function<void(const Graph&)>& visit) {
    check_mask_order(n);
    if (n == 0) return;
    const std::uint64_t bits = pair_count(n);
    const std::size_t max_edges = std::max(n + 1, 3 * (n - 1) / 2);   // bicyclic, or a cactus of triangles
    for (std::size_t m = n - 1; m <= max_edges; ++m) {
        if (m > n + 1) {
            if (m > bits) break;
            const std::uint64_t limit = std::uint64_t{1} << bits;
            for (std::uint64_t mask = (std::uint64_t{1} << m) - 1; mask < limit;) {
                if (mask_is_cactus(n, mask)) visit(graph_from_mask(n, mask));
                const std::uint64_t c = mask & (~mask + 1);
                const std::uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        } else {
            for_each_connected_graph_with_edges(n, m, visit);
        }
    }
}

} // namespace ternvec
