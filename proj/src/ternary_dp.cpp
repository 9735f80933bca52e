#include "ternvec/ternary_dp.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ternvec/errors.hpp"
#include "ternvec/structure.hpp"

namespace ternvec {

namespace {

constexpr SolutionCount kMax = std::numeric_limits<SolutionCount>::max();

SolutionCount add_sat(SolutionCount a, SolutionCount b) {
    return a > kMax - b ? kMax : a + b;
}

SolutionCount mul_sat(SolutionCount a, SolutionCount b) {
    if (a == 0 || b == 0) return 0;
    return a > kMax / b ? kMax : a * b;
}

constexpr std::array<int, 3> kValues{-1, 0, 1};

} // namespace

SolutionCount CactusSolver::VertexTables::at(int val, std::size_t t, int s) const {
    if (s < -span || s > span) return 0;
    const auto width = static_cast<std::size_t>(2 * span + 1);
    return layers[static_cast<std::size_t>(val + 1)][t * width + static_cast<std::size_t>(s + span)];
}

CactusSolver::CactusSolver(const Graph& cactus) {
    own_degree_.resize(cactus.order());
    for (Vertex v = 0; v < cactus.order(); ++v) own_degree_[v] = static_cast<int>(cactus.degree(v));
    plan(cactus);
}

CactusSolver::CactusSolver(const Graph& cactus, DpConstraints constraints) : CactusSolver(cactus) {
    solve(std::move(constraints));
}

void CactusSolver::solve(DpConstraints constraints) {
    c_ = std::move(constraints);
    const std::size_t n = own_degree_.size();
    if (c_.degree.empty()) c_.degree = own_degree_;
    if (c_.pinned.empty()) c_.pinned.assign(n, DpConstraints::kFree);
    if (c_.extra.empty()) c_.extra.assign(n, 0);
    if (c_.degree.size() != n || c_.pinned.size() != n || c_.extra.size() != n) {
        throw ContractViolation("CactusSolver: constraint vectors must match the graph order");
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        for (std::size_t b : vertices_[*it].child_blocks) fill_block(b);
        fill_vertex(*it);
    }
    total_ = 0;
    for (int val : kValues) {
        if (allowed(root_, val)) total_ = add_sat(total_, vertices_[root_].full(val, target(root_, val)));
    }
}

bool CactusSolver::allowed(Vertex y, int val) const {
    return c_.pinned[y] == DpConstraints::kFree || c_.pinned[y] == val;
}

int CactusSolver::target(Vertex y, int val) const {
    return (c_.degree[y] - c_.lambda) * val - c_.extra[y];
}

std::size_t CactusSolver::forward_index(std::size_t i, int first, int a, int b) const {
    return ((i * 3 + static_cast<std::size_t>(first + 1)) * 3 + static_cast<std::size_t>(a + 1)) * 3 +
           static_cast<std::size_t>(b + 1);
}

void CactusSolver::plan(const Graph& cactus) {
    const std::size_t n = cactus.order();
    const std::vector<Block> blocks = biconnected_blocks(cactus);
    const bool cactus_blocks = std::all_of(blocks.begin(), blocks.end(), [](const Block& b) {
        return b.is_bridge() || b.is_cycle();
    });
    if (n == 0 || !cactus_blocks) throw ContractViolation("CactusSolver: graph is not a connected cactus");
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Vertex v : blocks[b].vertices) incident[v].push_back(b);
    }
    vertices_.assign(n, {});
    blocks_.assign(blocks.size(), {});

    // Breadth-first over the block-cut tree; reversed, children precede parents.
    std::vector<Vertex> order;
    std::vector<bool> seen_vertex(n, false);
    std::vector<bool> seen_block(blocks.size(), false);
    std::queue<Vertex> queue;
    seen_vertex[root_] = true;
    queue.push(root_);
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop();
        order.push_back(x);
        for (std::size_t b : incident[x]) {
            if (seen_block[b]) continue;
            seen_block[b] = true;
            BlockTables& bt = blocks_[b];
            bt.cycle = blocks[b].is_cycle();
            if (bt.cycle) {
                bt.ring = cycle_order(blocks[b], x);
            } else {
                const Edge e = blocks[b].edges.front();
                bt.ring = {x, e.u == x ? e.v : e.u};
            }
            vertices_[x].child_blocks.push_back(b);
            vertices_[x].span += bt.cycle ? 2 : 1;
            for (std::size_t i = 1; i < bt.ring.size(); ++i) {
                seen_vertex[bt.ring[i]] = true;
                queue.push(bt.ring[i]);
            }
        }
    }

    if (order.size() != n) throw ContractViolation("CactusSolver: graph is not a connected cactus");
    order_ = std::move(order);
}

void CactusSolver::fill_vertex(Vertex x) {
    VertexTables& vt = vertices_[x];
    const int span = vt.span;
    const auto width = static_cast<std::size_t>(2 * span + 1);
    const std::size_t blocks = vt.child_blocks.size();
    for (int val : kValues) {
        auto& layer = vt.layers[static_cast<std::size_t>(val + 1)];
        layer.assign((blocks + 1) * width, 0);
        if (!allowed(x, val)) continue;
        layer[static_cast<std::size_t>(span)] = 1;
        for (std::size_t t = 1; t <= blocks; ++t) {
            const BlockTables& bt = blocks_[vt.child_blocks[t - 1]];
            const auto& contrib = bt.contrib[static_cast<std::size_t>(val + 1)];
            for (int s = -span; s <= span; ++s) {
                const SolutionCount before = layer[(t - 1) * width + static_cast<std::size_t>(s + span)];
                if (before == 0) continue;
                for (int c = -2; c <= 2; ++c) {
                    const SolutionCount ways = contrib[static_cast<std::size_t>(c + 2)];
                    if (ways == 0) continue;
                    const int next = s + c;
                    auto& cell = layer[t * width + static_cast<std::size_t>(next + span)];
                    cell = add_sat(cell, mul_sat(before, ways));
                }
            }
        }
    }
}

void CactusSolver::fill_block(std::size_t b) {
    BlockTables& bt = blocks_[b];
    if (!bt.cycle) {
        const Vertex y = bt.ring[1];
        for (int xv : kValues) {
            auto& contrib = bt.contrib[static_cast<std::size_t>(xv + 1)];
            contrib.fill(0);
            for (int yv : kValues) {
                if (!allowed(y, yv)) continue;
                contrib[static_cast<std::size_t>(yv + 2)] = vertices_[y].full(yv, target(y, yv) - xv);
            }
        }
        return;
    }
    const std::size_t k = bt.ring.size() - 1;
    for (int xv : kValues) {
        auto& fwd = bt.forward[static_cast<std::size_t>(xv + 1)];
        fwd.assign((k + 1) * 27, 0);
        auto& contrib = bt.contrib[static_cast<std::size_t>(xv + 1)];
        contrib.fill(0);
        for (int f : kValues) {
            if (allowed(bt.ring[1], f)) fwd[forward_index(1, f, xv, f)] = 1;
        }
        for (std::size_t i = 1; i < k; ++i) {
            const Vertex yi = bt.ring[i];
            const Vertex yn = bt.ring[i + 1];
            for (int f : kValues) {
                for (int a : kValues) {
                    for (int bv : kValues) {
                        const SolutionCount w = fwd[forward_index(i, f, a, bv)];
                        if (w == 0) continue;
                        for (int cv : kValues) {
                            if (!allowed(yn, cv)) continue;
                            const SolutionCount ways = vertices_[yi].full(bv, target(yi, bv) - a - cv);
                            if (ways == 0) continue;
                            auto& cell = fwd[forward_index(i + 1, f, bv, cv)];
                            cell = add_sat(cell, mul_sat(w, ways));
                        }
                    }
                }
            }
        }
        const Vertex yk = bt.ring[k];
        for (int f : kValues) {
            for (int a : kValues) {
                for (int bv : kValues) {
                    const SolutionCount w = fwd[forward_index(k, f, a, bv)];
                    if (w == 0) continue;
                    const SolutionCount ways = vertices_[yk].full(bv, target(yk, bv) - a - xv);
                    auto& cell = contrib[static_cast<std::size_t>(f + bv + 2)];
                    cell = add_sat(cell, mul_sat(w, ways));
                }
            }
        }
    }
}

// Pending obligations of a partial solution. Every pushed task is known to be
// satisfiable, so enumeration never backtracks out of a dead end.
struct CactusSolver::Task {
    enum class Kind : std::uint8_t { VertexSum, Block, CycleBack };
    Kind kind;
    std::uint32_t id;   // vertex or block
    std::int8_t val;    // vertex value, or parent value for blocks
    std::int32_t s;     // VertexSum: remaining sum; Block: contribution
    std::uint32_t t;    // VertexSum: blocks left; CycleBack: ring index i
    std::int8_t first;  // CycleBack
    std::int8_t a;      // CycleBack: v_{i-1}
    std::int8_t b;      // CycleBack: v_i
};

class CactusSolver::Enumerator {
public:
    Enumerator(const CactusSolver& solver, const std::function<bool(std::span<const std::int8_t>)>& visit)
        : s_(solver), visit_(visit), values_(solver.own_degree_.size(), 0) {}

    void run() {
        const Vertex r = s_.root_;
        for (int val : {1, 0, -1}) {
            if (stop_) return;
            if (!s_.allowed(r, val)) continue;
            const int need = s_.target(r, val);
            if (s_.vertices_[r].full(val, need) == 0) continue;
            values_[r] = static_cast<std::int8_t>(val);
            agenda_.push_back(vertex_sum(r, val, need));
            step();
            agenda_.pop_back();
        }
    }

private:
    Task vertex_sum(Vertex x, int val, int s) const {
        return {Task::Kind::VertexSum, x, static_cast<std::int8_t>(val), s,
                static_cast<std::uint32_t>(s_.vertices_[x].child_blocks.size()), 0, 0, 0};
    }

    void step() {
        if (stop_) return;
        if (agenda_.empty()) {
            if (!visit_(values_)) stop_ = true;
            return;
        }
        const Task task = agenda_.back();
        agenda_.pop_back();
        const std::size_t mark = agenda_.size();
        auto descend = [&](std::initializer_list<Task> pushed) {
            agenda_.insert(agenda_.end(), pushed.begin(), pushed.end());
            step();
            agenda_.resize(mark);
        };

        switch (task.kind) {
        case Task::Kind::VertexSum: {
            if (task.t == 0) {
                step();
                break;
            }
            const VertexTables& vt = s_.vertices_[task.id];
            const std::size_t b = vt.child_blocks[task.t - 1];
            const auto& contrib = s_.blocks_[b].contrib[static_cast<std::size_t>(task.val + 1)];
            for (int c = -2; c <= 2 && !stop_; ++c) {
                if (contrib[static_cast<std::size_t>(c + 2)] == 0) continue;
                if (vt.at(task.val, task.t - 1, task.s - c) == 0) continue;
                Task rest = task;
                rest.t -= 1;
                rest.s -= c;
                Task block{Task::Kind::Block, static_cast<std::uint32_t>(b), task.val, c, 0, 0, 0, 0};
                descend({rest, block});
            }
            break;
        }
        case Task::Kind::Block: {
            const BlockTables& bt = s_.blocks_[task.id];
            const int xv = task.val;
            if (!bt.cycle) {
                const Vertex y = bt.ring[1];
                const int yv = task.s;
                values_[y] = static_cast<std::int8_t>(yv);
                descend({vertex_sum(y, yv, s_.target(y, yv) - xv)});
                break;
            }
            const std::size_t k = bt.ring.size() - 1;
            const Vertex yk = bt.ring[k];
            const auto& fwd = bt.forward[static_cast<std::size_t>(xv + 1)];
            for (int f : kValues) {
                const int last = task.s - f;
                if (last < -1 || last > 1) continue;
                for (int a : kValues) {
                    if (stop_) break;
                    if (fwd[s_.forward_index(k, f, a, last)] == 0) continue;
                    const int need = s_.target(yk, last) - a - xv;
                    if (s_.vertices_[yk].full(last, need) == 0) continue;
                    values_[yk] = static_cast<std::int8_t>(last);
                    Task back{Task::Kind::CycleBack, task.id, static_cast<std::int8_t>(xv), 0,
                              static_cast<std::uint32_t>(k), static_cast<std::int8_t>(f),
                              static_cast<std::int8_t>(a), static_cast<std::int8_t>(last)};
                    descend({vertex_sum(yk, last, need), back});
                }
            }
            break;
        }
        case Task::Kind::CycleBack: {
            // v_i = b placed; v_{i-1} = a chosen but its vertex not yet expanded.
            if (task.t == 1) {
                step();
                break;
            }
            const BlockTables& bt = s_.blocks_[task.id];
            const std::size_t i = task.t - 1;
            const Vertex y = bt.ring[i];
            const auto& fwd = bt.forward[static_cast<std::size_t>(task.val + 1)];
            for (int z : kValues) {
                if (stop_) break;
                if (fwd[s_.forward_index(i, task.first, z, task.a)] == 0) continue;
                const int need = s_.target(y, task.a) - z - task.b;
                if (s_.vertices_[y].full(task.a, need) == 0) continue;
                values_[y] = task.a;
                Task back = task;
                back.t = static_cast<std::uint32_t>(i);
                back.a = static_cast<std::int8_t>(z);
                back.b = task.a;
                descend({vertex_sum(y, task.a, need), back});
            }
            break;
        }
        }
        agenda_.push_back(task);
    }

    const CactusSolver& s_;
    const std::function<bool(std::span<const std::int8_t>)>& visit_;
    std::vector<std::int8_t> values_;
    std::vector<Task> agenda_;
    bool stop_ = false;
};

void CactusSolver::enumerate(const std::function<bool(std::span<const std::int8_t>)>& visit) const {
    Enumerator(*this, visit).run();
}

std::vector<Edge> cactus_cut_edges(const Graph& g) {
    if (!is_connected(g)) throw ContractViolation("cactus_cut_edges: graph is not connected");
    std::vector<Edge> cut;
    Graph rest = g;
    while (true) {
        const auto blocks = biconnected_blocks(rest);
        const auto bad = std::find_if(blocks.begin(), blocks.end(),
                                      [](const Block& b) { return !b.is_bridge() && !b.is_cycle(); });
        if (bad == blocks.end()) return cut;
        // Blocks with three or more vertices are 2-edge-connected, so any edge will do.
        const Edge chosen = bad->edges.front();
        rest = rest.without_edge(chosen);
        cut.push_back(chosen);
    }
}

namespace {

Graph without_edges(const Graph& g, const std::vector<Edge>& cut) {
    Graph out = g;
    for (const Edge& e : cut) out = out.without_edge(e);
    return out;
}

} // namespace

TernarySolver::TernarySolver(const Graph& g)
    : cut_(cactus_cut_edges(g)), solver_(without_edges(g, cut_)) {
    for (const Edge& e : cut_) {
        pins_.push_back(e.u);
        pins_.push_back(e.v);
    }
    std::sort(pins_.begin(), pins_.end());
    pins_.erase(std::unique(pins_.begin(), pins_.end()), pins_.end());
    if (pins_.size() > 12) throw Rejected("solve_ternary: too many cut edges for pinned enumeration");
    degree_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) degree_[v] = static_cast<int>(g.degree(v));
}

TernarySolutions TernarySolver::solve(int lambda, std::size_t limit) {
    TernarySolutions out;
    out.cut_edges = cut_.size();
    const std::size_t n = degree_.size();
    const bool everything = limit == std::numeric_limits<std::size_t>::max();

    std::size_t combos = 1;
    for (std::size_t i = 0; i < pins_.size(); ++i) combos *= 3;
    SolutionCount zero_pins = 0;   // solutions with every pin 0, the zero vector included
    SolutionCount half = 0;        // solutions whose first nonzero pin is +1
    for (std::size_t code = 0; code < combos; ++code) {
        DpConstraints c;
        c.lambda = lambda;
        c.degree = degree_;
        c.pinned.assign(n, DpConstraints::kFree);
        c.extra.assign(n, 0);
        std::size_t rest = code;
        int first_pin = 0;
        for (Vertex p : pins_) {
            const int val = static_cast<int>(rest % 3) - 1;
            c.pinned[p] = static_cast<std::int8_t>(val);
            if (first_pin == 0) first_pin = val;
            rest /= 3;
        }
        if (first_pin < 0) continue;   // the negated pin vector covers it
        for (const Edge& e : cut_) {
            c.extra[e.u] += c.pinned[e.v];
            c.extra[e.v] += c.pinned[e.u];
        }
        solver_.solve(std::move(c));
        const SolutionCount found = solver_.count();
        if (first_pin == 0) zero_pins = add_sat(zero_pins, found);
        else half = add_sat(half, found);
        if (found == 0 || out.valuations.size() >= limit) continue;
        solver_.enumerate([&](std::span<const std::int8_t> values) {
            const auto first = std::find_if(values.begin(), values.end(), [](std::int8_t x) { return x != 0; });
            if (first == values.end()) return true;
            Valuation v(std::vector<std::int8_t>(values.begin(), values.end()));
            if (everything) {
                // With all pins 0 both v and -v turn up here; otherwise -v lives
                // under the skipped negated pins.
                if (first_pin != 0) out.valuations.push_back(v.canonical());
                else if (*first > 0) out.valuations.push_back(std::move(v));
            } else if (v = v.canonical();
                       std::find(out.valuations.begin(), out.valuations.end(), v) == out.valuations.end()) {
                out.valuations.push_back(std::move(v));
            }
            return out.valuations.size() < limit;
        });
    }
    // The all-zero vector always solves the homogeneous system; the rest pair up as +-v.
    out.count = zero_pins == kMax || half == kMax ? kMax : add_sat((zero_pins - 1) / 2, half);
    std::sort(out.valuations.begin(), out.valuations.end());
    return out;
}

TernarySolutions solve_ternary(const Graph& g, int lambda, std::size_t limit) {
    return TernarySolver(g).solve(lambda, limit);
}

} // namespace ternvec
