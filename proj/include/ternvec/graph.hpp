#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ternvec {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable: the "with_*" members return modified copies.
class Graph {
public:
    Graph() = default;

    /// n isolated vertices.
    explicit Graph(std::size_t n);

    /// Throws ContractViolation on self-loops, duplicate edges or ids >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    Graph with_edge(Edge e) const;
    Graph without_edge(Edge e) const;
    Graph with_isolated_vertices(std::size_t count) const;

    /// Edge {a,b} becomes {perm[a], perm[b]}; perm must be a permutation of 0..n-1.
    Graph relabeled(std::span<const Vertex> perm) const;

    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    /// Disjoint union; the other graph's vertices are shifted by order().
    Graph disjoint_union(const Graph& other) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

// Named small graphs used throughout tests, generators and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

} // namespace ternvec
