#include "ternvec/structure.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "ternvec/errors.hpp"

namespace ternvec {

Components connected_components(const Graph& g) {
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    Components c;
    c.of.assign(g.order(), kUnset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (c.of[s] != kUnset) continue;
        const auto id = static_cast<std::uint32_t>(c.count++);
        c.of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (c.of[y] == kUnset) {
                    c.of[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    return c;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && connected_components(g).count == 1;
}

std::int64_t cyclomatic_number(const Graph& g) {
    return static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) +
           static_cast<std::int64_t>(connected_components(g).count);
}

std::optional<std::vector<std::int8_t>> bipartition(const Graph& g) {
    std::vector<std::int8_t> side(g.order(), -1);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = static_cast<std::int8_t>(1 - side[x]);
                    queue.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

std::vector<Block> biconnected_blocks(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto kUnvisited = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> disc(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Block> blocks;
    std::uint32_t time = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;   // index into neighbors(v)
    };
    std::vector<Frame> stack;

    auto pop_block = [&](Edge until) {
        Block b;
        while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
            if (e == until) break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
        blocks.push_back(std::move(b));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        disc[root] = low[root] = time++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == kUnvisited) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = time++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            stack.pop_back();
            if (stack.empty()) break;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) pop_block(Edge(parent, v));
        }
    }
    return blocks;
}

std::vector<Vertex> cycle_order(const Block& cycle, Vertex start) {
    if (!cycle.is_cycle()) throw ContractViolation("cycle_order: block is not a cycle");
    std::vector<Vertex> order{start};
    Vertex prev = start;
    Vertex cur = start;
    auto other_end = [&](Vertex at, Vertex not_this) -> Vertex {
        for (const Edge& e : cycle.edges) {
            if (e.u == at && e.v != not_this) return e.v;
            if (e.v == at && e.u != not_this) return e.u;
        }
        throw ContractViolation("cycle_order: broken cycle");
    };
    // First step picks the smaller neighbour so the order is deterministic.
    Vertex first = static_cast<Vertex>(-1);
    for (const Edge& e : cycle.edges) {
        if (e.u == start) first = std::min(first, e.v);
        if (e.v == start) first = std::min(first, e.u);
    }
    if (first == static_cast<Vertex>(-1)) throw ContractViolation("cycle_order: start not on cycle");
    cur = first;
    while (cur != start) {
        order.push_back(cur);
        const Vertex next = other_end(cur, prev);
        prev = cur;
        cur = next;
    }
    return order;
}

bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const Block& b : biconnected_blocks(g)) {
        if (!b.is_bridge() && !b.is_cycle()) return false;
    }
    return true;
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Tree: return "Tree";
    case FamilyKind::Unicyclic: return "Unicyclic";
    case FamilyKind::Bicyclic: return "Bicyclic";
    case FamilyKind::Cactus: return "Cactus";
    case FamilyKind::RegularBipartite: return "RegularBipartite";
    case FamilyKind::General: return "General";
    }
    return "?";
}

std::string BicyclicShape::to_string() const {
    std::string name;
    switch (type) {
    case Type::B1: name = "B1"; break;
    case Type::B2: name = "B2"; break;
    case Type::B3: name = "B3"; break;
    case Type::WithLeaves: return "WithLeaves";
    }
    name += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(params[i]);
    }
    return name + ')';
}

namespace {

// Walks from `hub` along edge (hub, first) through degree-2 vertices; returns
// the hub-degree vertex reached and the number of edges walked.
std::pair<Vertex, int> walk_chain(const Graph& g, Vertex hub, Vertex first) {
    Vertex prev = hub;
    Vertex cur = first;
    int length = 1;
    while (g.degree(cur) == 2) {
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++length;
    }
    return {cur, length};
}

} // namespace

BicyclicShape bicyclic_shape(const Graph& g) {
    if (!is_connected(g) || g.size() != g.order() + 1) {
        throw ContractViolation("bicyclic_shape: graph is not connected with m = n + 1");
    }
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) return {BicyclicShape::Type::WithLeaves, {}};
        if (g.degree(v) > 2) hubs.push_back(v);
    }
    // Leafless with degree sum 2n+2: one degree-4 hub or two degree-3 hubs.
    if (hubs.size() == 1) {
        const Vertex u = hubs[0];
        std::vector<int> cycles;
        std::vector<Vertex> used;
        for (Vertex w : g.neighbors(u)) {
            if (std::find(used.begin(), used.end(), w) != used.end()) continue;
            auto [end, len] = walk_chain(g, u, w);
            // The walk returns to u through the cycle's other neighbour of u.
            Vertex prev = u;
            Vertex cur = w;
            for (int i = 1; i < len; ++i) {
                const auto nb = g.neighbors(cur);
                const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            used.push_back(w);
            used.push_back(prev);
            cycles.push_back(len);
        }
        std::sort(cycles.begin(), cycles.end());
        return {BicyclicShape::Type::B1, cycles};
    }
    const Vertex u = hubs.at(0);
    const Vertex v = hubs.at(1);
    std::vector<int> chains;
    std::vector<int> loops_u;
    std::vector<Vertex> seen_u;
    for (Vertex w : g.neighbors(u)) {
        auto [end, len] = walk_chain(g, u, w);
        if (end == v) {
            chains.push_back(len + 1);   // vertices, both ends included
        } else {
            loops_u.push_back(len);      // each loop is seen twice from u
        }
    }
    if (chains.size() == 3) {
        std::sort(chains.begin(), chains.end(), std::greater<>());
        if (chains.back() == 2) std::swap(chains[1], chains[2]);
        return {BicyclicShape::Type::B3, chains};
    }
    int loop_v = 0;
    for (Vertex w : g.neighbors(v)) {
        auto [end, len] = walk_chain(g, v, w);
        if (end == v) loop_v = len;
    }
    const int p = loops_u.at(0);
    const int q = loop_v;
    const int r = chains.at(0) - 2;
    return {BicyclicShape::Type::B2, {std::min(p, q), std::max(p, q), r}};
}

std::vector<FamilyKind> Family::kinds() const {
    std::vector<FamilyKind> out;
    for (int k = 0; k <= static_cast<int>(FamilyKind::General); ++k) {
        if (has(static_cast<FamilyKind>(k))) out.push_back(static_cast<FamilyKind>(k));
    }
    return out;
}

std::string Family::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (FamilyKind k : kinds()) {
        if (!first) out << ',';
        first = false;
        out << ternvec::to_string(k);
        if (k == FamilyKind::Bicyclic && shape) out << '[' << shape->to_string() << ']';
        if (k == FamilyKind::RegularBipartite && regular_degree) out << "[d=" << *regular_degree << ']';
    }
    if (!connected) out << " disconnected";
    out << " c=" << cyclomatic;
    return out.str();
}

Family classify_family(const Graph& g) {
    Family f;
    const auto comps = connected_components(g);
    f.components = comps.count;
    f.connected = comps.count == 1;
    f.cyclomatic = static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) +
                   static_cast<std::int64_t>(comps.count);
    auto set = [&](FamilyKind k) { f.mask |= static_cast<std::uint8_t>(1U << static_cast<int>(k)); };
    if (!f.connected) {
        set(FamilyKind::General);
        return f;
    }
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    if (m + 1 == n) set(FamilyKind::Tree);
    if (m == n) set(FamilyKind::Unicyclic);
    if (m == n + 1) {
        set(FamilyKind::Bicyclic);
        f.shape = bicyclic_shape(g);
    }
    if (is_cactus(g)) set(FamilyKind::Cactus);
    if (const auto d = regular_degree(g); d && bipartition(g)) {
        set(FamilyKind::RegularBipartite);
        f.regular_degree = d;
    }
    if (f.mask == 0) set(FamilyKind::General);
    return f;
}

} // namespace ternvec
