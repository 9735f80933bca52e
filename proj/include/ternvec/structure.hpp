#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternvec/graph.hpp"

namespace ternvec {

struct Components {
    std::vector<std::uint32_t> of;   // component id per vertex
    std::size_t count = 0;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// m - n + (#components).
std::int64_t cyclomatic_number(const Graph& g);

/// Two-colouring with sides 0/1, or nullopt if the graph has an odd cycle.
std::optional<std::vector<std::int8_t>> bipartition(const Graph& g);

/// Common degree if every vertex has it.
std::optional<std::size_t> regular_degree(const Graph& g);

/// A biconnected component. Bridges come out as two-vertex blocks.
struct Block {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    bool is_bridge() const { return edges.size() == 1; }
    /// 2-connected with as many edges as vertices: a chordless cycle.
    bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
};

/// Hopcroft-Tarjan biconnected components; isolated vertices belong to no block.
std::vector<Block> biconnected_blocks(const Graph& g);

/// Vertices of a cycle block in walking order, starting at `start`.
std::vector<Vertex> cycle_order(const Block& cycle, Vertex start);

/// Connected, and every block is a bridge or a chordless cycle.
bool is_cactus(const Graph& g);

enum class FamilyKind : std::uint8_t { Tree, Unicyclic, Bicyclic, Cactus, RegularBipartite, General };

std::string to_string(FamilyKind kind);

/// Shapes of a connected graph with n+1 edges. Parameter conventions:
///   B1(p,q)   cycles C_p and C_q sharing one vertex, p <= q, n = p+q-1.
///   B2(p,q,r) cycles C_p and C_q joined by a path with r interior vertices,
///             p <= q, n = p+q+r.
///   B3(p,q,r) two degree-3 vertices joined by three chains holding p, q, r
///             vertices (both ends included), n = p+q+r-4. Listed in
///             descending order except that a two-vertex chain (a direct edge)
///             is listed second, e.g. the diamond is B3(3,2,3).
///   WithLeaves  the graph has a vertex of degree one.
struct BicyclicShape {
    enum class Type : std::uint8_t { B1, B2, B3, WithLeaves };
    Type type = Type::WithLeaves;
    std::vector<int> params;

    std::string to_string() const;
    friend bool operator==(const BicyclicShape&, const BicyclicShape&) = default;
};

/// Throws ContractViolation unless g is connected with m = n+1.
BicyclicShape bicyclic_shape(const Graph& g);

/// Every family the graph belongs to. Disconnected (or empty) graphs report
/// only General, with `connected` false.
struct Family {
    std::uint8_t mask = 0;
    bool connected = false;
    std::size_t components = 0;
    std::int64_t cyclomatic = 0;
    std::optional<BicyclicShape> shape;          // when Bicyclic
    std::optional<std::size_t> regular_degree;   // when RegularBipartite

    bool has(FamilyKind k) const { return (mask >> static_cast<int>(k)) & 1U; }
    std::vector<FamilyKind> kinds() const;
    /// e.g. "Bicyclic[B1(3,3)],Cactus c=2".
    std::string to_string() const;
};

Family classify_family(const Graph& g);

} // namespace ternvec
