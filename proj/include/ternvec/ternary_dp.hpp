#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ternvec/graph.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

/// Solution counts saturate at the maximum value instead of wrapping.
using SolutionCount = std::uint64_t;

/// Constraint system solved over a cactus: for every vertex y,
///   (degree[y] - lambda) * v_y = (sum of v over cactus neighbours) + extra[y],
/// with v_y forced to pinned[y] when pinned[y] != kFree.
struct DpConstraints {
    static constexpr std::int8_t kFree = 2;

    int lambda = 0;
    std::vector<int> degree;            // defaults to cactus degrees
    std::vector<std::int8_t> pinned;    // defaults to all free
    std::vector<int> extra;             // defaults to 0
};

/// Dynamic programme over the block-cut tree of a connected cactus. Each
/// vertex table records, per own value, how many ways its descendant blocks
/// can contribute a given neighbour sum; cycle blocks are swept with a
/// (previous, current, first) state. Counting and enumeration are polynomial
/// in n apart from the size of the output.
class CactusSolver {
public:
    /// Builds the block-cut tree once. Throws ContractViolation unless
    /// `cactus` is a connected cactus.
    explicit CactusSolver(const Graph& cactus);
    CactusSolver(const Graph& cactus, DpConstraints constraints);

    /// Refills the tables for new constraints, reusing the block-cut tree.
    void solve(DpConstraints constraints);

    /// Number of solutions, the all-zero one included when admissible.
    SolutionCount count() const { return total_; }

    /// Calls visit(values) for every solution until it returns false.
    void enumerate(const std::function<bool(std::span<const std::int8_t>)>& visit) const;

private:
    struct BlockTables {
        std::vector<Vertex> ring;   // ring[0] is the parent vertex
        bool cycle = false;
        // contrib[xv][c + 2]: ways for the block to send neighbour sum c to its parent valued xv - 1.
        std::array<std::array<SolutionCount, 5>, 3> contrib{};
        // forward[xv][((i * 3 + first) * 3 + a) * 3 + b] for cycles.
        std::array<std::vector<SolutionCount>, 3> forward;
    };

    struct VertexTables {
        std::vector<std::size_t> child_blocks;
        int span = 0;   // max |neighbour sum| over child blocks
        // layers[val][t * (2*span+1) + s + span]
        std::array<std::vector<SolutionCount>, 3> layers;

        SolutionCount at(int val, std::size_t t, int s) const;
        SolutionCount full(int val, int s) const { return at(val, child_blocks.size(), s); }
    };

    struct Task;
    class Enumerator;

    bool allowed(Vertex y, int val) const;
    int target(Vertex y, int val) const;
    void plan(const Graph& cactus);
    void fill_vertex(Vertex x);
    void fill_block(std::size_t b);
    std::size_t forward_index(std::size_t i, int first, int a, int b) const;

    std::vector<int> own_degree_;
    DpConstraints c_;
    Vertex root_ = 0;
    std::vector<Vertex> order_;   // block-cut tree BFS order from the root
    std::vector<VertexTables> vertices_;
    std::vector<BlockTables> blocks_;
    SolutionCount total_ = 0;
};

/// Eigenvectors with eigenvalue lambda of a connected graph, computed with
/// CactusSolver after cutting edges until the remainder is a cactus; the
/// endpoints of cut edges are pinned in every combination (9 per cut edge).
struct TernarySolutions {
    SolutionCount count = 0;            // canonical nonzero solutions
    std::vector<Valuation> valuations;  // canonical; all of them or up to the limit
    std::size_t cut_edges = 0;
};

/// Cuts the graph down to a cactus once, then answers one eigenvalue at a
/// time. Pin vectors p and -p have negated solution sets, so only one of each
/// pair is solved.
class TernarySolver {
public:
    /// Throws ContractViolation unless g is connected; Rejected when more than
    /// 12 vertices would need pinning.
    explicit TernarySolver(const Graph& g);

    /// `limit` caps the number of valuations collected: 0 only counts,
    /// SIZE_MAX collects every solution.
    TernarySolutions solve(int lambda, std::size_t limit);

    std::size_t cut_edges() const noexcept { return cut_.size(); }

private:
    std::vector<Edge> cut_;
    std::vector<Vertex> pins_;
    std::vector<int> degree_;
    CactusSolver solver_;
};

/// TernarySolver(g).solve(lambda, limit).
TernarySolutions solve_ternary(const Graph& g, int lambda, std::size_t limit);

/// Edges whose removal leaves a cactus (greedy; empty for a cactus).
std::vector<Edge> cactus_cut_edges(const Graph& g);

} // namespace ternvec
