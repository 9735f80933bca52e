#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "ternvec/graph.hpp"

namespace ternvec {

// Labeled graphs on n <= 11 vertices are encoded as bitmasks over the pairs
// (0,1), (0,2), (1,2), (0,3), ... (the graph6 order); bit index of (i,j),
// i < j, is j(j-1)/2 + i.

std::uint64_t pair_count(std::size_t n);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
bool mask_connected(std::size_t n, std::uint64_t mask);

/// Connected, and no edge on two cycles (each DFS tree edge is covered by at
/// most one back edge).
bool mask_is_cactus(std::size_t n, std::uint64_t mask);

/// Tree with the given Prüfer sequence on seq.size() + 2 vertices.
Graph tree_from_pruefer(std::span<const Vertex> seq);

/// Uniformly random labeled tree on n vertices (random Prüfer sequence).
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Every labeled tree on n vertices, n^(n-2) of them (one for n <= 2).
void for_each_tree(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Every connected labeled graph on n vertices, in mask order.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Every connected labeled graph on n vertices with exactly m edges
/// (Gosper's hack over the pair bits).
void for_each_connected_graph_with_edges(std::size_t n, std::size_t m,
                                         const std::function<void(const Graph&)>& visit);

/// Every connected labeled tree, unicyclic, bicyclic or cactus graph on n
/// vertices, by edge count from n-1 upwards.
void for_each_family_member(std::size_t n, const std::function<void(const Graph&)>& visit);

} // namespace ternvec
