#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ternvec/graph.hpp"

namespace ternvec {

// graph6, as written by nauty's geng/showg: a size header followed by the
// upper adjacency triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed big-endian into 6-bit groups offset by 63.

/// Parses one graph6 line (a trailing newline and a leading ">>graph6<<" are
/// accepted). Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

// Edge lists: one "u v" pair per line with 0-based ids. Blank lines and '#'
// comments are ignored. An optional first directive "n <count>" fixes the
// order (needed for isolated vertices); otherwise n = max id + 1.

/// Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Always emits the "n" directive, so parse_edge_list(to_edge_list(g)) == g.
std::string to_edge_list(const Graph& g);

/// Edge list over arbitrary whitespace-free labels; ids are assigned in order
/// of first appearance.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;   // labels[id]
    std::map<std::string, Vertex> ids;
};

LabeledGraph parse_labeled_edge_list(std::string_view text);

/// DOT with sorted edges. With `values`, vertices are filled by sign:
/// +1 and -1 get distinct colours and 0 (soft) a third.
std::string to_dot(const Graph& g, std::optional<std::span<const std::int8_t>> values = std::nullopt,
                   std::string_view name = "G");

} // namespace ternvec
