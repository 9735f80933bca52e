#include "ternvec/matching.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ternvec/errors.hpp"
#include "ternvec/generate.hpp"
#include "ternvec/structure.hpp"

namespace ternvec {

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Kuhn's algorithm from the side-0 vertices.
class Kuhn {
public:
    Kuhn(const Graph& g, std::span<const std::int8_t> sides) : g_(g), sides_(sides), match_(g.order(), kNone) {}

    std::vector<Edge> run() {
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (sides_[x] != 0) continue;
            seen_.assign(g_.order(), false);
            augment(x);
        }
        std::vector<Edge> out;
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (sides_[x] == 0 && match_[x] != kNone) out.emplace_back(x, match_[x]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool augment(Vertex x) {
        for (Vertex y : g_.neighbors(x)) {
            if (seen_[y]) continue;
            seen_[y] = true;
            if (match_[y] == kNone || augment(match_[y])) {
                match_[y] = x;
                match_[x] = y;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    std::span<const std::int8_t> sides_;
    std::vector<Vertex> match_;
    std::vector<bool> seen_;
};

} // namespace

std::vector<Edge> max_bipartite_matching(const Graph& g, std::span<const std::int8_t> sides) {
    if (sides.size() != g.order()) throw ContractViolation("max_bipartite_matching: bipartition length mismatch");
    for (std::int8_t s : sides) {
        if (s != 0 && s != 1) throw ContractViolation("max_bipartite_matching: sides must be 0 or 1");
    }
    for (const Edge& e : g.edges()) {
        if (sides[e.u] == sides[e.v]) {
            throw ContractViolation("max_bipartite_matching: edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} lies within one side");
        }
    }
    return Kuhn(g, sides).run();
}

std::string MatchingPartition::violation(const Graph& g) const {
    std::set<Edge> seen;
    for (std::size_t k = 0; k < matchings.size(); ++k) {
        std::vector<int> cover(g.order(), 0);
        for (const Edge& e : matchings[k]) {
            if (e.v >= g.order() || !g.adjacent(e.u, e.v)) return "matching " + std::to_string(k) + " uses a non-edge";
            if (!seen.insert(e).second) return "matchings share an edge";
            ++cover[e.u];
            ++cover[e.v];
        }
        if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; })) {
            return "matching " + std::to_string(k) + " is not perfect";
        }
    }
    if (seen.size() != g.size()) return "matchings do not cover every edge";
    return {};
}

MatchingPartition perfect_matching_partition(const Graph& g) {
    const auto d = regular_degree(g);
    if (!d) throw Rejected("perfect_matching_partition: graph is not regular");
    const auto sides = bipartition(g);
    if (!sides) throw Rejected("perfect_matching_partition: graph is not bipartite");

    MatchingPartition out;
    Graph rest = g;
    for (std::size_t k = 0; k < *d; ++k) {
        std::vector<Edge> m = max_bipartite_matching(rest, *sides);
        // Hall's condition holds in every regular bipartite graph.
        if (2 * m.size() != g.order()) throw ContractViolation("perfect_matching_partition: no perfect matching");
        for (const Edge& e : m) rest = rest.without_edge(e);
        out.matchings.push_back(std::move(m));
    }
    return out;
}

std::int64_t cyclomatic_check(std::int64_t n, std::int64_t d) {
    if (n <= 0 || n % 2 != 0) throw ContractViolation("cyclomatic_check: regular bipartite graphs have even order");
    if (d < 0) throw ContractViolation("cyclomatic_check: negative degree");
    return (n / 2) * (d - 2) + 1;
}

std::optional<std::pair<std::int64_t, std::int64_t>> achievable_c(std::int64_t c, std::int64_t max_order) {
    for (std::int64_t n = 2; n <= max_order; n += 2) {
        for (std::int64_t d = 1; d <= n / 2; ++d) {
            if (cyclomatic_check(n, d) != c) continue;
            const Graph g = d == 1 ? path_graph(2)
                                   : gen_regular_bipartite(static_cast<int>(n / 2), static_cast<int>(d - 2)).graph();
            if (static_cast<std::int64_t>(g.order()) == n && is_connected(g) &&
                regular_degree(g) == static_cast<std::size_t>(d) && cyclomatic_number(g) == c) {
                return std::pair(n, d);
            }
        }
    }
    return std::nullopt;
}

bool is_hamiltonian(const Graph& g, std::size_t max_order) {
    const std::size_t n = g.order();
    if (n > max_order) {
        throw Rejected("is_hamiltonian: " + std::to_string(n) + " vertices exceed the bound " + std::to_string(max_order));
    }
    if (n < 3 || !is_connected(g)) return false;
    for (Vertex x = 0; x < n; ++x) {
        if (g.degree(x) < 2) return false;
    }
    // A Hamiltonian graph is 2-connected.
    if (biconnected_blocks(g).size() != 1) return false;

    std::vector<bool> on_path(n, false);
    std::vector<int> free_degree(n);   // neighbours not yet on the path
    for (Vertex x = 0; x < n; ++x) free_degree[x] = static_cast<int>(g.degree(x));

    // Every vertex off the path needs two usable neighbours: unvisited ones,
    // the path's head, or vertex 0 (the start).
    const std::function<bool(Vertex, std::size_t)> extend = [&](Vertex head, std::size_t length) -> bool {
        if (length == n) return g.adjacent(head, 0);
        for (Vertex y : g.neighbors(head)) {
            if (on_path[y]) continue;
            on_path[y] = true;
            for (Vertex z : g.neighbors(y)) --free_degree[z];
            bool ok = true;
            for (Vertex z : g.neighbors(head)) {
                // Unvisited neighbours of the old head lose it for good.
                if (!on_path[z] && free_degree[z] + (g.adjacent(z, 0) ? 1 : 0) + (g.adjacent(z, y) ? 1 : 0) < 2) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(y, length + 1)) return true;
            for (Vertex z : g.neighbors(y)) ++free_degree[z];
            on_path[y] = false;
        }
        return false;
    };
    on_path[0] = true;
    for (Vertex z : g.neighbors(0)) --free_degree[z];
    return extend(0, 1);
}

} // namespace ternvec
