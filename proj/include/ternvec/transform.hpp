#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ternvec/graph.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

// Eigenpair-preserving surgery. Every result is re-verified by the
// Certificate constructor.

/// Adds edge {i,j} between equal-valued vertices. Throws ContractViolation if
/// v_i != v_j or the edge exists.
Certificate add_equal_link(const Certificate& c, Vertex i, Vertex j);

/// Deletes edge {i,j} between equal-valued vertices. Throws ContractViolation
/// if v_i != v_j or the edge is absent.
Certificate remove_equal_link(const Certificate& c, Vertex i, Vertex j);

/// Edge from vertex `attached` of the attachment graph to vertex `host` of the
/// certificate's graph.
struct SoftJoin {
    Vertex attached = 0;
    Vertex host = 0;
};

/// Appends the attachment's vertices (valued 0, ids shifted by n) and the
/// joins. Every host must be a soft node.
Certificate extend_soft(const Certificate& c, const Graph& attachment, std::span<const SoftJoin> joins);

/// Disjoint union of two certificates with the same eigenvalue.
Certificate disjoint_union(const Certificate& a, const Certificate& b);

/// Catalogue of equal-link-free building blocks.
///   IsolatedZeros       all values 0 (may contain edges)
///   ChainP2             P2 as [1,-1]                                lambda 2
///   SoftStar(k)         S_{2k+1}, soft centre, k leaves of each sign  lambda 1
///   Cycle4k(k)          C_{4k}, repeating (1,0,-1,0)                lambda 2
///   Cycle3k(k)          C_{3k}, repeating (1,0,-1)                  lambda 3
///   EvenCycle(k)        C_{2k}, alternating                         lambda 4
///   B1(p,q)             two cycles on one soft vertex               lambda 2 or 3
///   B3(p,q,r)           three chains between two hubs               lambda 3, or 4 (diamond)
///   GluedCycles(l...)   three or more cycles identified at soft vertices (cactus)
///   GeneralizedTheta(l...) four or more chains between two hubs
///   Other               anything else
struct ComponentClass {
    enum class Kind : std::uint8_t {
        IsolatedZeros,
        ChainP2,
        SoftStar,
        Cycle4k,
        Cycle3k,
        EvenCycle,
        B1,
        B3,
        GluedCycles,
        GeneralizedTheta,
        Other
    };

    Kind kind = Kind::Other;
    std::vector<int> params;
    std::optional<int> lambda;   // empty for IsolatedZeros

    std::string to_string() const;
    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

std::string to_string(ComponentClass::Kind kind);

/// Classifies a connected graph carrying an equal-link-free valuation.
ComponentClass classify_component(const Graph& g, std::span<const std::int8_t> values);

struct Component {
    std::vector<Vertex> vertices;       // ids in the original graph, ascending
    Graph graph;                        // vertex i is vertices[i]
    std::vector<std::int8_t> values;    // restricted valuation
    ComponentClass cls;
};

struct Decomposition {
    std::vector<Edge> equal_links;      // removed edges, in original ids
    std::vector<Component> components;

    /// Components plus the removed links, back in original ids.
    Graph reassemble() const;
    std::size_t order() const;
};

/// Deletes every equal link and classifies each connected component.
Decomposition decompose(const Certificate& c);

} // namespace ternvec
