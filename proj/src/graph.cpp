#include "ternvec/graph.hpp"

#include <algorithm>

#include "ternvec/errors.hpp"

namespace ternvec {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw ContractViolation("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= n) {
            throw ContractViolation("vertex " + std::to_string(e.v) + " out of range for order " +
                                    std::to_string(n));
        }
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw ContractViolation("duplicate edge at vertex " + std::to_string(v));
        }
    }
    g.m_ = edges.size();
    return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(Edge e) const {
    if (e.u == e.v || e.v >= order()) {
        throw ContractViolation("invalid edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    if (adjacent(e.u, e.v)) {
        throw ContractViolation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
    }
    Graph g = *this;
    auto insert = [](std::vector<Vertex>& list, Vertex x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert(g.adj_[e.u], e.v);
    insert(g.adj_[e.v], e.u);
    ++g.m_;
    return g;
}

Graph Graph::without_edge(Edge e) const {
    if (!adjacent(e.u, e.v)) {
        throw ContractViolation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not present");
    }
    Graph g = *this;
    auto erase = [](std::vector<Vertex>& list, Vertex x) {
        list.erase(std::lower_bound(list.begin(), list.end(), x));
    };
    erase(g.adj_[e.u], e.v);
    erase(g.adj_[e.v], e.u);
    --g.m_;
    return g;
}

Graph Graph::with_isolated_vertices(std::size_t count) const {
    Graph g = *this;
    g.adj_.resize(order() + count);
    return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order()) throw ContractViolation("permutation length differs from graph order");
    std::vector<Edge> mapped;
    mapped.reserve(m_);
    for (const Edge& e : edges()) mapped.emplace_back(perm[e.u], perm[e.v]);
    return from_edges(order(), mapped);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> local(order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= order()) throw ContractViolation("induced: vertex out of range");
        local[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : adj_[vertices[i]]) {
            if (local[w] > static_cast<std::int64_t>(i)) {
                kept.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
            }
        }
    }
    return from_edges(vertices.size(), kept);
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph g = with_isolated_vertices(other.order());
    const auto shift = static_cast<Vertex>(order());
    for (Vertex v = 0; v < other.order(); ++v) {
        auto& list = g.adj_[v + shift];
        for (Vertex w : other.adj_[v]) list.push_back(w + shift);
    }
    g.m_ += other.m_;
    return g;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ContractViolation("a simple cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    return Graph::from_edges(a + b, e);
}

} // namespace ternvec
