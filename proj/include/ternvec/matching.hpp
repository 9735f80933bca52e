#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ternvec/graph.hpp"

namespace ternvec {

/// Maximum-cardinality matching by augmenting paths. `sides` gives each vertex
/// side 0 or 1; throws ContractViolation if an edge joins two vertices on the
/// same side or the length differs from n.
std::vector<Edge> max_bipartite_matching(const Graph& g, std::span<const std::int8_t> sides);

/// Edge partition of a d-regular bipartite graph into d perfect matchings.
struct MatchingPartition {
    std::vector<std::vector<Edge>> matchings;

    /// Empty when every matching is perfect, the matchings are pairwise
    /// disjoint and together they hold exactly the edges of g; otherwise the
    /// first violated property.
    std::string violation(const Graph& g) const;
};

/// Peels off one perfect matching at a time; each removal leaves a
/// (d-1)-regular bipartite graph. Throws Rejected naming the failed property
/// when g is not regular or not bipartite.
MatchingPartition perfect_matching_partition(const Graph& g);

/// c = (n/2)(d-2) + 1 for a connected d-regular bipartite graph on n vertices.
/// Throws ContractViolation for odd n or negative d.
std::int64_t cyclomatic_check(std::int64_t n, std::int64_t d);

/// Smallest (n, d), ordered by n and then d, with even n <= max_order and
/// 1 <= d <= n/2, such that a connected d-regular bipartite graph on n
/// vertices has cyclomatic number c. Each witness is confirmed by building
/// gen_regular_bipartite(n/2, d-2), or P2 when d = 1.
std::optional<std::pair<std::int64_t, std::int64_t>> achievable_c(std::int64_t c, std::int64_t max_order = 200);

/// Exact test for a Hamiltonian cycle by backtracking with connectivity and
/// degree pruning. Graphs with fewer than 3 vertices have none. Throws
/// Rejected above max_order.
bool is_hamiltonian(const Graph& g, std::size_t max_order = 24);

} // namespace ternvec
