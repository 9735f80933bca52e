#include "ternvec/generate.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <string>

#include "ternvec/errors.hpp"
#include "ternvec/structure.hpp"

namespace ternvec {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

Certificate make(std::size_t n, const std::vector<Edge>& edges, std::vector<std::int8_t> values, int lambda) {
    auto g = std::make_shared<const Graph>(Graph::from_edges(n, edges));
    return Certificate(std::move(g), Valuation(std::move(values)), lambda);
}

// Parent block of block c (c >= 1) in a tree of blocks.
std::size_t parent_block(const WiringSpec& w, std::size_t c, Rng& rng) {
    switch (w.kind) {
    case Wiring::Chain: return c - 1;
    case Wiring::Star: return 0;
    case Wiring::Random: return pick(rng, c);
    }
    return c - 1;
}

// Values x_1..x_{len-1} along a cycle whose vertex x_0 = x_len = 0 is a
// joint, or nothing when the recurrence leaves {-1,0,1} or does not close.
std::optional<std::vector<int>> cycle_run(int len, int lambda, int start) {
    std::vector<int> x(static_cast<std::size_t>(len) + 1, 0);
    x[1] = start;
    for (int i = 1; i < len; ++i) {
        x[i + 1] = (2 - lambda) * x[i] - x[i - 1];
        if (x[i + 1] < -1 || x[i + 1] > 1) return std::nullopt;
    }
    if (x[static_cast<std::size_t>(len)] != 0) return std::nullopt;
    return std::vector<int>(x.begin() + 1, x.end() - 1);
}

// Pattern value of a cycle position for the given eigenvalue.
int cycle_pattern(int lambda, std::size_t pos) {
    if (lambda == 2) {
        static constexpr int p[4] = {1, 0, -1, 0};
        return p[pos % 4];
    }
    if (lambda == 3) {
        static constexpr int p[3] = {1, 0, -1};
        return p[pos % 3];
    }
    return pos % 2 == 0 ? 1 : -1;
}

} // namespace

Certificate gen_p2_tree(int p, WiringSpec wiring) {
    if (p < 1) throw Rejected("gen_p2_tree: need p >= 1");
    Rng rng(wiring.seed);
    const auto chains = static_cast<std::size_t>(p);
    std::vector<std::int8_t> values(2 * chains);
    std::vector<Edge> edges;
    values[0] = 1;
    values[1] = -1;
    edges.emplace_back(0, 1);
    for (std::size_t c = 1; c < chains; ++c) {
        const std::size_t parent = parent_block(wiring, c, rng);
        // Chain wiring runs through the second vertex so the result is a path;
        // Star wiring hangs every chain on vertex 1.
        std::size_t end = 1;
        if (wiring.kind == Wiring::Random) end = pick(rng, 2);
        const auto host = static_cast<Vertex>(2 * parent + end);
        const auto first = static_cast<Vertex>(2 * c);
        values[first] = values[host];
        values[first + 1] = static_cast<std::int8_t>(-values[host]);
        edges.emplace_back(first, first + 1);
        edges.emplace_back(host, first);
    }
    return make(2 * chains, edges, std::move(values), 2);
}

Certificate gen_soft_star(int k) {
    const int ks[] = {k};
    return gen_star_tree(ks, {});
}

Certificate gen_star_tree(std::span<const int> ks, WiringSpec wiring) {
    if (ks.empty()) throw Rejected("gen_star_tree: need at least one star");
    Rng rng(wiring.seed);
    std::vector<Vertex> centre;
    std::vector<std::int8_t> values;
    std::vector<Edge> edges;
    for (int k : ks) {
        if (k < 1) throw Rejected("gen_star_tree: every star needs k >= 1");
        const auto c = static_cast<Vertex>(values.size());
        centre.push_back(c);
        values.push_back(0);
        for (int i = 0; i < 2 * k; ++i) {
            edges.emplace_back(c, static_cast<Vertex>(values.size()));
            values.push_back(static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1));
        }
    }
    for (std::size_t s = 1; s < ks.size(); ++s) {
        const std::size_t parent = parent_block(wiring, s, rng);
        if (wiring.kind != Wiring::Random) {
            edges.emplace_back(centre[parent], centre[s]);
            continue;
        }
        // Any vertex of the new star, to a vertex of the parent with the same value.
        const Vertex mine = centre[s] + static_cast<Vertex>(pick(rng, 2 * static_cast<std::size_t>(ks[s]) + 1));
        std::vector<Vertex> hosts;
        const Vertex end = centre[parent] + 2 * static_cast<Vertex>(ks[parent]) + 1;
        for (Vertex x = centre[parent]; x < end; ++x) {
            if (values[x] == values[mine]) hosts.push_back(x);
        }
        edges.emplace_back(hosts[pick(rng, hosts.size())], mine);
    }
    const std::size_t n = values.size();
    return make(n, edges, std::move(values), 1);
}

Certificate gen_cycle(CycleKind kind, int k) {
    if (k < 1) throw Rejected("gen_cycle: need k >= 1");
    int len = 0;
    int lambda = 0;
    switch (kind) {
    case CycleKind::C4k: len = 4 * k; lambda = 2; break;
    case CycleKind::C3k: len = 3 * k; lambda = 3; break;
    case CycleKind::C2k:
        if (k < 2) throw Rejected("gen_cycle: C2k needs k >= 2 (C2 is not simple)");
        len = 2 * k;
        lambda = 4;
        break;
    }
    std::vector<std::int8_t> values;
    for (int i = 0; i < len; ++i) values.push_back(static_cast<std::int8_t>(cycle_pattern(lambda, static_cast<std::size_t>(i))));
    const auto n = static_cast<std::size_t>(len);
    return Certificate(std::make_shared<const Graph>(cycle_graph(n)), Valuation(std::move(values)), lambda);
}

Certificate gen_B1(int p, int q, std::optional<int> lambda) {
    if (p < 3 || q < 3) throw Rejected("gen_B1: both cycles need length >= 3");
    const std::vector<int> candidates = lambda ? std::vector<int>{*lambda} : std::vector<int>{2, 3};
    for (int l : candidates) {
        // Each cycle run from the joint must close; the joint then needs the
        // two sums (first + last value of each run) to cancel.
        for (int s2 : {1, -1}) {
            const auto a = cycle_run(p, l, 1);
            const auto b = cycle_run(q, l, s2);
            if (!a || !b) continue;
            if (a->front() + a->back() + b->front() + b->back() != 0) continue;
            std::vector<std::int8_t> values{0};
            std::vector<Edge> edges;
            const auto append = [&](const std::vector<int>& run) {
                const auto first = static_cast<Vertex>(values.size());
                for (int x : run) values.push_back(static_cast<std::int8_t>(x));
                const auto last = static_cast<Vertex>(values.size() - 1);
                edges.emplace_back(0, first);
                for (Vertex x = first; x < last; ++x) edges.emplace_back(x, x + 1);
                edges.emplace_back(last, 0);
            };
            append(*a);
            append(*b);
            const std::size_t n = values.size();
            return make(n, edges, std::move(values), l);
        }
    }
    std::string why = "gen_B1(" + std::to_string(p) + "," + std::to_string(q) + "): ";
    if (lambda && *lambda != 2 && *lambda != 3) why += "eigenvalue must be 2 or 3";
    else if (lambda == 2) why += "lambda 2 needs p,q = 0 mod 4 or p,q = 2 mod 4";
    else if (lambda == 3) why += "lambda 3 needs p,q = 0 mod 3";
    else why += "needs p,q = 0 mod 4 or p,q = 2 mod 4 (lambda 2), or p,q = 0 mod 3 (lambda 3)";
    throw Rejected(why);
}

Certificate gen_B3(std::span<const int> chains) {
    if (chains.size() < 3) throw Rejected("gen_B3: need at least three chains");
    int direct = 0;
    for (int c : chains) {
        if (c < 2) throw Rejected("gen_B3: every chain holds at least its two ends");
        if (c == 2) ++direct;
    }
    if (direct > 1) throw Rejected("gen_B3: at most one chain may be a direct edge");

    const bool thirds = std::all_of(chains.begin(), chains.end(), [](int c) { return c % 3 == 0; });
    const bool all_three = std::all_of(chains.begin(), chains.end(), [](int c) { return c == 3; });
    int lambda = 0;
    if (chains.size() == 3) {
        std::vector<int> sorted(chains.begin(), chains.end());
        std::sort(sorted.begin(), sorted.end());
        const bool even_and_two_threes = sorted[0] == 3 && sorted[1] == 3 && sorted[2] % 2 == 0;
        const bool direct_and_two_threes = sorted == std::vector<int>{2, 3, 3};
        if (thirds) lambda = 3;
        else if (even_and_two_threes || direct_and_two_threes) lambda = 4;
        else throw Rejected("gen_B3: needs every chain = 0 mod 3 (lambda 3) or chains {3,3,even} (lambda 4)");
    } else {
        if (!all_three) {
            throw Rejected("gen_B3: with four or more chains only 3-vertex chains work (lambda = number of chains); "
                           "the (1,0,-1) pattern gives the hubs a different eigenvalue than the interior");
        }
        lambda = static_cast<int>(chains.size());
    }

    std::vector<std::int8_t> values{1, -1};
    std::vector<Edge> edges;
    for (int c : chains) {
        Vertex prev = 0;
        for (int i = 1; i + 1 < c; ++i) {
            const auto x = static_cast<Vertex>(values.size());
            int val = 0;
            if (lambda == 3) val = cycle_pattern(3, static_cast<std::size_t>(i));
            else if (c != 3) val = i % 2 == 0 ? 1 : -1;
            values.push_back(static_cast<std::int8_t>(val));
            edges.emplace_back(prev, x);
            prev = x;
        }
        edges.emplace_back(prev, 1);
    }
    const std::size_t n = values.size();
    return make(n, edges, std::move(values), lambda);
}

Certificate gen_diamond() {
    return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {1, -1, 0, 0}, 4);
}

Certificate gen_cactus(int lambda, std::span<const int> lengths, std::span<const CactusGlue> glues) {
    if (lambda != 2 && lambda != 3) throw Rejected("gen_cactus: eigenvalue must be 2 or 3");
    if (lengths.empty()) throw Rejected("gen_cactus: need at least one cycle");
    if (glues.size() + 1 != lengths.size()) throw Rejected("gen_cactus: need one glue per cycle after the first");
    const int period = lambda == 2 ? 4 : 3;
    for (int len : lengths) {
        if (len < 3 || len % period != 0) {
            throw Rejected("gen_cactus: lambda " + std::to_string(lambda) + " needs every cycle length = 0 mod " +
                           std::to_string(period) + ", got " + std::to_string(len));
        }
    }
    std::vector<std::vector<Vertex>> ids(lengths.size());
    std::vector<std::int8_t> values;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < lengths.size(); ++b) {
        const auto len = static_cast<std::size_t>(lengths[b]);
        std::optional<Vertex> shared;
        std::size_t shared_pos = 0;
        if (b > 0) {
            const CactusGlue& glue = glues[b - 1];
            if (glue.parent >= b) throw Rejected("gen_cactus: glue must attach to an earlier cycle");
            if (glue.parent_pos >= ids[glue.parent].size() || glue.child_pos >= len) {
                throw Rejected("gen_cactus: glue position out of range");
            }
            const Vertex host = ids[glue.parent][glue.parent_pos];
            if (values[host] != 0 || cycle_pattern(lambda, glue.child_pos) != 0) {
                throw Rejected("gen_cactus: gluing at a nonzero vertex breaks lambda = d_i + hard degree "
                               "(the glued vertex would need lambda < d_i + d_i_hard)");
            }
            shared = host;
            shared_pos = glue.child_pos;
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (shared && i == shared_pos) {
                ids[b].push_back(*shared);
                continue;
            }
            ids[b].push_back(static_cast<Vertex>(values.size()));
            values.push_back(static_cast<std::int8_t>(cycle_pattern(lambda, i)));
        }
        for (std::size_t i = 0; i < len; ++i) edges.emplace_back(ids[b][i], ids[b][(i + 1) % len]);
    }
    const std::size_t n = values.size();
    return make(n, edges, std::move(values), lambda);
}

Certificate gen_regular_bipartite(int k, int l) {
    if (k < 2) throw Rejected("gen_regular_bipartite: need k >= 2");
    if (l < 0 || l > k - 2) {
        throw Rejected("gen_regular_bipartite: need 0 <= l <= k-2 (larger l repeats cycle edges)");
    }
    const auto n = static_cast<std::size_t>(2 * k);
    std::vector<Edge> edges = cycle_graph(n).edges();
    for (int t = 1; t <= l; ++t) {
        for (int j = 0; j < k; ++j) {
            edges.emplace_back(static_cast<Vertex>(2 * j), static_cast<Vertex>((2 * j + 2 * t + 1) % (2 * k)));
        }
    }
    std::vector<std::int8_t> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = i % 2 == 0 ? 1 : -1;
    return make(n, edges, std::move(values), 2 * (2 + l));
}

Graph gen_counterexample() {
    std::vector<Edge> edges;
    constexpr Vertex alpha = 18;
    constexpr Vertex beta = 19;
    for (Vertex i = 0; i < 3; ++i) {
        const Vertex base = 6 * i;
        for (Vertex a = 0; a < 3; ++a) {
            for (Vertex b = 3; b < 6; ++b) {
                if (a == 0 && b == 3) continue;
                edges.emplace_back(base + a, base + b);
            }
        }
        edges.emplace_back(alpha, base + 3);
        edges.emplace_back(beta, base);
    }
    return Graph::from_edges(20, edges);
}

Certificate gen_compose(const Certificate& base, std::span<const ComposeOp> ops, ComposeOptions options) {
    Rng rng(options.seed);
    Certificate cur = base;
    for (const ComposeOp& op : ops) {
        const Graph& g = cur.graph();
        const auto values = cur.valuation().values();
        const std::size_t n = g.order();
        switch (op.kind) {
        case ComposeOp::Kind::AddEqualLink: cur = add_equal_link(cur, op.i, op.j); break;
        case ComposeOp::Kind::RemoveEqualLink: cur = remove_equal_link(cur, op.i, op.j); break;
        case ComposeOp::Kind::ExtendSoft: cur = extend_soft(cur, op.attachment, op.joins); break;
        case ComposeOp::Kind::DisjointUnion:
            if (!op.other) throw ContractViolation("gen_compose: DisjointUnion needs a certificate");
            cur = disjoint_union(cur, *op.other);
            break;
        case ComposeOp::Kind::RandomEqualLink: {
            const Components comps = connected_components(g);
            std::vector<Edge> options_list;
            for (Vertex a = 0; a < n; ++a) {
                for (Vertex b = a + 1; b < n; ++b) {
                    if (values[a] != values[b] || g.adjacent(a, b)) continue;
                    if (options.forbid_new_cycles && comps.of[a] == comps.of[b]) continue;
                    options_list.emplace_back(a, b);
                }
            }
            if (options_list.empty()) break;
            const Edge e = options_list[pick(rng, options_list.size())];
            cur = add_equal_link(cur, e.u, e.v);
            break;
        }
        case ComposeOp::Kind::RandomRemoveLink: {
            const auto links = equal_links(g, values);
            if (links.empty()) break;
            const Edge e = links[pick(rng, links.size())];
            cur = remove_equal_link(cur, e.u, e.v);
            break;
        }
        case ComposeOp::Kind::RandomSoftTree: {
            const std::vector<Vertex> soft = soft_nodes(g, cur.valuation());
            if (soft.empty()) break;
            const std::size_t size = 1 + pick(rng, 3);
            std::vector<Edge> tree;
            for (std::size_t x = 1; x < size; ++x) tree.emplace_back(static_cast<Vertex>(pick(rng, x)), static_cast<Vertex>(x));
            std::vector<SoftJoin> joins{{0, soft[pick(rng, soft.size())]}};
            if (!options.forbid_new_cycles && soft.size() > 1 && pick(rng, 2) == 1) {
                const SoftJoin extra{static_cast<Vertex>(pick(rng, size)), soft[pick(rng, soft.size())]};
                if (extra.attached != joins[0].attached || extra.host != joins[0].host) joins.push_back(extra);
            }
            cur = extend_soft(cur, Graph::from_edges(size, tree), joins);
            break;
        }
        }
    }
    return cur;
}

} // namespace ternvec
