#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ternvec/graph.hpp"
#include "ternvec/transform.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

// Certified constructors. Every function returns a Certificate, which means
// the eigenvector identity has been checked before the value escapes. Invalid
// parameters throw Rejected with the failed condition in the message.

/// How building blocks are joined by equal links into a tree of blocks.
enum class Wiring : std::uint8_t { Chain, Star, Random };

struct WiringSpec {
    Wiring kind = Wiring::Chain;
    std::uint64_t seed = 0;   // used by Wiring::Random
};

/// p copies of P2 ([s,-s] each) joined by p-1 equal links into a tree;
/// bivalent, lambda 2. Chain wiring gives the path P_{2p}.
Certificate gen_p2_tree(int p, WiringSpec wiring = {});

/// S_{2k+1}: centre 0 is soft, leaves 1..2k alternate +1/-1; lambda 1.
Certificate gen_soft_star(int k);

/// Soft stars S_{2k_i+1} joined by equal links without cycles; lambda 1.
/// Chain and Star wiring link centres (0-0 links); Random also links leaves.
Certificate gen_star_tree(std::span<const int> ks, WiringSpec wiring = {});

enum class CycleKind : std::uint8_t { C4k, C3k, C2k };

/// C_4k with (1,0,-1,0)* (lambda 2), C_3k with (1,0,-1)* (lambda 3), or C_2k
/// with (1,-1)* (lambda 4). C2k needs k >= 2.
Certificate gen_cycle(CycleKind kind, int k);

/// Two cycles C_p, C_q sharing the soft vertex 0; cycle one holds vertices
/// 1..p-1, cycle two p..p+q-2. Each cycle's values come from the recurrence
/// x_{i+1} = (2 - lambda) x_i - x_{i-1} with x_0 = 0, and the two sums sent to
/// the joint must cancel. Without `lambda`, 2 is tried before 3.
Certificate gen_B1(int p, int q, std::optional<int> lambda = std::nullopt);

/// Chains holding the given vertex counts (ends included) between hubs 0
/// and 1; interiors are appended chain by chain. Three chains: every count a
/// multiple of 3 gives lambda 3 with (1,0,-1)* from hub 0; counts {3,3,even}
/// give lambda 4. Four or more chains are accepted only when every chain has
/// 3 vertices (K_{2,k}, lambda k); longer chains would make the hubs' and the
/// interior's eigenvalues disagree.
Certificate gen_B3(std::span<const int> chains);

/// K4 minus an edge: hubs u = 0, v = 1 (valued 1, -1), a = 2, b = 3 soft; lambda 4.
Certificate gen_diamond();

/// Attaches cycle block `child` (blocks are numbered by position in the
/// lengths list) by identifying its vertex `child_pos` with vertex
/// `parent_pos` of an earlier block `parent`. Positions count along the
/// block's pattern from its first vertex.
struct CactusGlue {
    std::size_t parent = 0;
    std::size_t parent_pos = 1;
    std::size_t child_pos = 1;
};

/// Cycles glued at soft vertices. lambda 2 needs every length a multiple of
/// 4, lambda 3 a multiple of 3. glues[i] attaches block i+1. Gluing a nonzero
/// vertex is rejected: its degree would rise above what lambda allows.
Certificate gen_cactus(int lambda, std::span<const int> lengths, std::span<const CactusGlue> glues);

/// C_2k plus matchings M_t = {{2j, (2j+2t+1) mod 2k}} for t = 1..l. The
/// result is (2+l)-regular and bipartite, with the parity vector at lambda 2(2+l).
/// Needs k >= 2 and 0 <= l <= k-2.
Certificate gen_regular_bipartite(int k, int l);

/// Three copies of K_{3,3} minus an edge {a_i, b_i}, with vertex 18 (alpha)
/// joined to every b_i and vertex 19 (beta) to every a_i. 3-regular,
/// bipartite 10+10, not Hamiltonian. Copy i uses vertices 6i..6i+5: the
/// A side is 6i..6i+2, the B side 6i+3..6i+5, a_i = 6i and b_i = 6i+3.
Graph gen_counterexample();

/// One step of gen_compose.
struct ComposeOp {
    enum class Kind : std::uint8_t {
        AddEqualLink,       // i, j
        RemoveEqualLink,    // i, j
        ExtendSoft,         // attachment, joins
        DisjointUnion,      // other
        RandomEqualLink,    // seeded; skipped when no pair qualifies
        RandomRemoveLink,   // seeded; skipped when there is no equal link
        RandomSoftTree      // seeded tree of 1..3 zero vertices on soft nodes; skipped without soft nodes
    };

    Kind kind = Kind::RandomEqualLink;
    Vertex i = 0;
    Vertex j = 0;
    Graph attachment;
    std::vector<SoftJoin> joins;
    std::optional<Certificate> other;
};

struct ComposeOptions {
    std::uint64_t seed = 0;
    /// Random links only join different components and soft trees get a
    /// single join, so the cyclomatic number never grows.
    bool forbid_new_cycles = false;
};

Certificate gen_compose(const Certificate& base, std::span<const ComposeOp> ops, ComposeOptions options = {});

} // namespace ternvec
