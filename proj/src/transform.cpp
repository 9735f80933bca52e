#include "ternvec/transform.hpp"

#include <algorithm>
#include <numeric>

#include "ternvec/errors.hpp"
#include "ternvec/structure.hpp"

namespace ternvec {

namespace {

void require_equal(const Certificate& c, Vertex i, Vertex j, const char* op) {
    const std::size_t n = c.graph().order();
    if (i >= n || j >= n || i == j) {
        throw ContractViolation(std::string(op) + ": invalid vertex pair");
    }
    if (c.valuation()[i] != c.valuation()[j]) {
        throw ContractViolation(std::string(op) + ": vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                " carry different values");
    }
}

} // namespace

Certificate add_equal_link(const Certificate& c, Vertex i, Vertex j) {
    require_equal(c, i, j, "add_equal_link");
    if (c.graph().adjacent(i, j)) throw ContractViolation("add_equal_link: edge already present");
    return Certificate(std::make_shared<const Graph>(c.graph().with_edge(Edge(i, j))), c.valuation(), c.lambda());
}

Certificate remove_equal_link(const Certificate& c, Vertex i, Vertex j) {
    require_equal(c, i, j, "remove_equal_link");
    if (!c.graph().adjacent(i, j)) throw ContractViolation("remove_equal_link: edge not present");
    return Certificate(std::make_shared<const Graph>(c.graph().without_edge(Edge(i, j))), c.valuation(),
                       c.lambda());
}

Certificate extend_soft(const Certificate& c, const Graph& attachment, std::span<const SoftJoin> joins) {
    const std::size_t n = c.graph().order();
    for (const SoftJoin& join : joins) {
        if (join.host >= n || join.attached >= attachment.order()) {
            throw ContractViolation("extend_soft: join endpoint out of range");
        }
        if (c.valuation()[join.host] != 0) {
            throw ContractViolation("extend_soft: host vertex " + std::to_string(join.host) + " is not soft");
        }
    }
    Graph g = c.graph().disjoint_union(attachment);
    std::vector<Edge> edges = g.edges();
    for (const SoftJoin& join : joins) edges.emplace_back(join.host, static_cast<Vertex>(n + join.attached));
    g = Graph::from_edges(g.order(), edges);
    std::vector<std::int8_t> values(c.valuation().values().begin(), c.valuation().values().end());
    values.resize(g.order(), 0);
    return Certificate(std::make_shared<const Graph>(std::move(g)), Valuation(std::move(values)), c.lambda());
}

Certificate disjoint_union(const Certificate& a, const Certificate& b) {
    if (a.lambda() != b.lambda()) {
        throw ContractViolation("disjoint_union: eigenvalues " + std::to_string(a.lambda()) + " and " +
                                std::to_string(b.lambda()) + " differ");
    }
    std::vector<std::int8_t> values(a.valuation().values().begin(), a.valuation().values().end());
    values.insert(values.end(), b.valuation().values().begin(), b.valuation().values().end());
    return Certificate(std::make_shared<const Graph>(a.graph().disjoint_union(b.graph())),
                       Valuation(std::move(values)), a.lambda());
}

std::string to_string(ComponentClass::Kind kind) {
    using K = ComponentClass::Kind;
    switch (kind) {
    case K::IsolatedZeros: return "IsolatedZeros";
    case K::ChainP2: return "ChainP2";
    case K::SoftStar: return "SoftStar";
    case K::Cycle4k: return "Cycle4k";
    case K::Cycle3k: return "Cycle3k";
    case K::EvenCycle: return "EvenCycle";
    case K::B1: return "B1";
    case K::B3: return "B3";
    case K::GluedCycles: return "GluedCycles";
    case K::GeneralizedTheta: return "GeneralizedTheta";
    case K::Other: return "Other";
    }
    return "?";
}

std::string ComponentClass::to_string() const {
    std::string s = ternvec::to_string(kind);
    if (!params.empty()) {
        s += '(';
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(params[i]);
        }
        s += ')';
    }
    return s;
}

namespace {

// Chains between two hubs when every other vertex has degree 2; vertex counts
// include both hubs. Empty if the graph is not of that form.
std::vector<int> theta_chains(const Graph& g) {
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) hubs.push_back(v);
    }
    if (hubs.size() != 2 || g.degree(hubs[0]) != g.degree(hubs[1]) || g.degree(hubs[0]) < 3) return {};
    const Vertex u = hubs[0];
    const Vertex v = hubs[1];
    std::vector<int> chains;
    for (Vertex first : g.neighbors(u)) {
        Vertex prev = u;
        Vertex cur = first;
        int count = 2;
        while (cur != v) {
            if (cur == u || g.degree(cur) != 2) return {};
            const auto nb = g.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++count;
        }
        chains.push_back(count);
    }
    std::sort(chains.begin(), chains.end(), std::greater<>());
    return chains;
}

} // namespace

ComponentClass classify_component(const Graph& g, std::span<const std::int8_t> values) {
    using K = ComponentClass::Kind;
    if (values.size() != g.order()) throw ContractViolation("classify_component: length mismatch");
    if (std::all_of(values.begin(), values.end(), [](std::int8_t x) { return x == 0; })) {
        return {K::IsolatedZeros, {}, std::nullopt};
    }
    const Valuation v(std::vector<std::int8_t>(values.begin(), values.end()));
    const auto lambda = verify(g, v);
    if (!lambda || !is_connected(g) || !equal_links(g, values).empty()) return {K::Other, {}, lambda};
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    const int ni = static_cast<int>(n);

    if (n == 2 && *lambda == 2) return {K::ChainP2, {}, 2};

    if (n >= 3 && m == n - 1) {
        const auto centre = std::find_if(values.begin(), values.end(), [](std::int8_t x) { return x == 0; });
        if (centre != values.end()) {
            const auto c = static_cast<Vertex>(centre - values.begin());
            if (g.degree(c) == n - 1 && *lambda == 1) return {K::SoftStar, {(ni - 1) / 2}, 1};
        }
        return {K::Other, {}, lambda};
    }

    if (m == n && regular_degree(g) == std::size_t{2}) {
        if (*lambda == 4 && n % 2 == 0) return {K::EvenCycle, {ni / 2}, 4};
        if (*lambda == 2 && n % 4 == 0) return {K::Cycle4k, {ni / 4}, 2};
        if (*lambda == 3 && n % 3 == 0) return {K::Cycle3k, {ni / 3}, 3};
        return {K::Other, {}, lambda};
    }

    if (m == n + 1) {
        const BicyclicShape shape = bicyclic_shape(g);
        if (shape.type == BicyclicShape::Type::B1 && (*lambda == 2 || *lambda == 3)) {
            return {K::B1, shape.params, lambda};
        }
        if (shape.type == BicyclicShape::Type::B3) return {K::B3, shape.params, lambda};
        return {K::Other, {}, lambda};
    }

    if (is_cactus(g)) {
        std::vector<int> lengths;
        bool cycles_only = true;
        for (const Block& b : biconnected_blocks(g)) {
            if (!b.is_cycle()) {
                cycles_only = false;
                break;
            }
            lengths.push_back(static_cast<int>(b.vertices.size()));
        }
        // Blocks share vertices only at soft cut vertices.
        bool soft_joints = cycles_only;
        for (Vertex x = 0; soft_joints && x < n; ++x) {
            if (g.degree(x) > 2 && values[x] != 0) soft_joints = false;
        }
        if (soft_joints && lengths.size() >= 3 && (*lambda == 2 || *lambda == 3)) {
            std::sort(lengths.begin(), lengths.end(), std::greater<>());
            return {K::GluedCycles, lengths, lambda};
        }
        return {K::Other, {}, lambda};
    }

    if (auto chains = theta_chains(g); chains.size() >= 4) return {K::GeneralizedTheta, chains, lambda};
    return {K::Other, {}, lambda};
}

Decomposition decompose(const Certificate& c) {
    const Graph& g = c.graph();
    const auto values = c.valuation().values();
    Decomposition d;
    d.equal_links = equal_links(g, values);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (values[e.u] != values[e.v]) kept.push_back(e);
    }
    const Graph stripped = Graph::from_edges(g.order(), kept);
    const Components comps = connected_components(stripped);
    std::vector<std::vector<Vertex>> members(comps.count);
    for (Vertex v = 0; v < g.order(); ++v) members[comps.of[v]].push_back(v);
    for (auto& vertices : members) {
        Component comp;
        comp.graph = stripped.induced(vertices);
        comp.values.reserve(vertices.size());
        for (Vertex v : vertices) comp.values.push_back(values[v]);
        comp.cls = classify_component(comp.graph, comp.values);
        comp.vertices = std::move(vertices);
        d.components.push_back(std::move(comp));
    }
    return d;
}

std::size_t Decomposition::order() const {
    std::size_t n = 0;
    for (const auto& comp : components) n += comp.vertices.size();
    return n;
}

Graph Decomposition::reassemble() const {
    std::vector<Edge> edges = equal_links;
    for (const auto& comp : components) {
        for (const Edge& e : comp.graph.edges()) edges.emplace_back(comp.vertices[e.u], comp.vertices[e.v]);
    }
    return Graph::from_edges(order(), edges);
}

} // namespace ternvec
