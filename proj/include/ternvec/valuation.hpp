#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ternvec/graph.hpp"

namespace ternvec {

/// Per-vertex entries in {-1, 0, +1}, not all zero.
class Valuation {
public:
    /// Throws ContractViolation on an entry outside {-1,0,1} or an all-zero vector.
    explicit Valuation(std::vector<std::int8_t> values);
    Valuation(std::initializer_list<int> values);

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const std::int8_t> values() const noexcept { return values_; }

    bool is_bivalent() const;   // no zero entry
    Valuation negated() const;
    /// Sign chosen so the lowest-indexed nonzero entry is +1.
    Valuation canonical() const;
    bool is_canonical() const;

    /// Compact form over {+,0,-}, e.g. "+0-0".
    std::string to_string() const;
    /// Accepts '+', '-', '0'; throws ParseError with the offending offset.
    static Valuation parse(std::string_view text);

    friend auto operator<=>(const Valuation&, const Valuation&) = default;

private:
    std::vector<std::int8_t> values_;
};

/// Returns lambda when L(G)v = lambda*v holds exactly for one integer
/// lambda >= 1. Kernel vectors (lambda = 0) and constant vectors are not
/// certificates. Throws ContractViolation on a length mismatch.
std::optional<int> verify(const Graph& g, const Valuation& v);

/// Number of neighbours of `j` with a nonzero value.
int hard_degree(const Graph& g, const Valuation& v, Vertex j);
std::vector<Vertex> soft_nodes(const Graph& g, const Valuation& v);

/// Edges {i,j} with v_i = v_j.
std::vector<Edge> equal_links(const Graph& g, std::span<const std::int8_t> values);

enum class Valence : std::uint8_t { Bivalent, Trivalent };
std::string to_string(Valence v);

/// (graph, valuation, lambda) with L(G)v = lambda*v checked on construction.
/// The valuation is stored in canonical sign. The graph is shared between
/// copies and never mutated.
class Certificate {
public:
    /// Verifies and derives lambda; throws ContractViolation if v is not an eigenvector.
    Certificate(Graph g, const Valuation& v);
    Certificate(std::shared_ptr<const Graph> g, const Valuation& v);
    /// Also checks the derived lambda equals `lambda`.
    Certificate(std::shared_ptr<const Graph> g, const Valuation& v, int lambda);

    const Graph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph>& shared_graph() const noexcept { return graph_; }
    const Valuation& valuation() const noexcept { return valuation_; }
    int lambda() const noexcept { return lambda_; }
    Valence valence() const { return valuation_.is_bivalent() ? Valence::Bivalent : Valence::Trivalent; }

    /// {"graph": <graph6>, "valuation": "+0-", "lambda": 3}
    std::string to_json() const;
    static Certificate from_json(std::string_view text);

private:
    std::shared_ptr<const Graph> graph_;
    Valuation valuation_;
    int lambda_ = 0;
};

std::vector<Edge> equal_links(const Certificate& c);

/// Per-vertex outcome of the local trivalent criterion for an equal-link-free
/// valuation: a nonzero vertex j passes iff lambda = d_j + hard_degree(j); a
/// soft vertex passes iff it sees as many +1 as -1 neighbours.
struct LocalCheck {
    std::vector<bool> pass;
    bool all_pass() const;
};

/// Throws ContractViolation if the valuation has an equal link on g.
LocalCheck trivalent_local_check(const Graph& g, const Valuation& v, int lambda);

} // namespace ternvec
