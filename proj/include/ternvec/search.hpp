#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ternvec/graph.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

struct SearchStats {
    std::uint64_t nodes = 0;    // partial assignments (or full vectors) examined
    std::uint64_t prunes = 0;   // partial assignments cut by a bound
};

/// Canonically signed, deduplicated certificates sorted by (lambda, valuation).
class SearchResult {
public:
    SearchResult() = default;
    explicit SearchResult(std::vector<Certificate> certificates, SearchStats stats = {});

    const std::vector<Certificate>& certificates() const& noexcept { return certificates_; }
    // By value on temporaries, so `for (auto& c : search(g).certificates())` is safe.
    std::vector<Certificate> certificates() && { return std::move(certificates_); }
    const SearchStats& stats() const noexcept { return stats_; }
    bool empty() const noexcept { return certificates_.empty(); }
    std::size_t size() const noexcept { return certificates_.size(); }

    std::map<int, std::size_t> lambda_counts() const;
    std::vector<int> lambdas() const;
    std::vector<Certificate> with_lambda(int lambda) const;

    /// Set union; statistics add up.
    void merge(const SearchResult& other);

    /// Same (lambda, valuation) pairs; statistics are ignored.
    bool same_certificates(const SearchResult& other) const;

private:
    void normalize();

    std::vector<Certificate> certificates_;
    SearchStats stats_;
};

struct BruteForceOptions {
    std::size_t max_order = 16;
    /// Reject whole groups of vectors that provably fail: vectors whose entries
    /// do not sum to 0 (1^T L = 0, so 1^T v = 0 whenever lambda != 0), and
    /// supports where a vertex outside sees an odd number of support vertices
    /// (its neighbour sum cannot vanish). Off means every vector is tested.
    bool bulk_rejection = true;
};

/// Ground truth: tests every ternary vector (first nonzero entry +1) against
/// the eigenvector identity. Throws Rejected above options.max_order.
SearchResult brute_force(const Graph& g, BruteForceOptions options = {});

struct CspOptions {
    /// With pruning off, constraints are only checked on complete assignments.
    bool prune = true;
};

/// All certificates with eigenvalue `lambda`, found by backtracking over the
/// constraints (d_i - lambda) v_i = sum_{j~i} v_j. Vertices are assigned in BFS
/// order from a maximum-degree vertex; a vertex is cut as soon as its target
/// lies outside the interval its unassigned neighbours can still reach.
/// Throws ContractViolation unless 1 <= lambda <= n.
SearchResult csp_search(const Graph& g, int lambda, CspOptions options = {});

struct SpectrumOptions {
    CspOptions csp;
    unsigned jobs = 1;
};

/// csp_search for every lambda in 1..n, merged.
SearchResult full_spectrum(const Graph& g, SpectrumOptions options = {});

} // namespace ternvec
