#include "ternvec/recognize.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <set>

#include "ternvec/errors.hpp"

namespace ternvec {

namespace {

using K = ComponentClass::Kind;
constexpr int kUnbounded = std::numeric_limits<int>::max();

bool b1_lambda2(const std::vector<int>& p) {
    return p.size() == 2 && p[0] % 4 == p[1] % 4 && (p[0] % 4 == 0 || p[0] % 4 == 2);
}

bool all_divisible(const std::vector<int>& p, int d) {
    return !p.empty() && std::all_of(p.begin(), p.end(), [d](int x) { return x % d == 0; });
}

bool all_even(const std::vector<int>& p) { return all_divisible(p, 2); }

// Extra conditions on the anchor components of a clause.
using ParamCheck = bool (*)(const ComponentClass&);

bool any_params(const ComponentClass&) { return true; }
bool b1_lambda2_params(const ComponentClass& c) { return b1_lambda2(c.params); }
bool thirds_params(const ComponentClass& c) { return all_divisible(c.params, 3); }
// Two three-vertex chains plus one chain with an even vertex count; the
// diamond B3(3,2,3) is the smallest.
bool b3_lambda4(const std::vector<int>& p) {
    if (p.size() != 3) return false;
    int threes = 0;
    int even = 0;
    for (int x : p) {
        if (x == 3) ++threes;
        else if (x % 2 == 0) ++even;
    }
    return threes == 2 && even == 1;
}

bool b3_lambda4_params(const ComponentClass& c) { return b3_lambda4(c.params); }

bool even_cactus_params(const ComponentClass& c) {
    switch (c.kind) {
    case K::Cycle4k: return true;
    case K::B1: return b1_lambda2(c.params);
    case K::GluedCycles: return all_even(c.params);
    default: return false;
    }
}

bool third_cactus_params(const ComponentClass& c) {
    return c.kind == K::Cycle3k || all_divisible(c.params, 3);
}

struct Rule {
    Clause id;
    FamilyKind family;
    const char* name;
    int lambda;
    Valence valence;
    std::vector<K> anchor;   // at least min_anchor, at most max_anchor of these
    int min_anchor;
    int max_anchor;
    std::vector<K> allowed;  // other admissible component kinds
    ParamCheck params;
};

const std::vector<Rule>& rules() {
    using F = FamilyKind;
    using V = Valence;
    static const std::vector<Rule> table = {
        {Clause::TreeP2Chains, F::Tree, "tree/p2-chains", 2, V::Bivalent, {K::ChainP2}, 1, kUnbounded, {}, any_params},
        {Clause::TreeSoftStars, F::Tree, "tree/soft-stars", 1, V::Trivalent, {K::SoftStar}, 1, kUnbounded,
         {K::IsolatedZeros}, any_params},

        {Clause::UnicyclicP2Chains, F::Unicyclic, "unicyclic/p2-chains", 2, V::Bivalent, {K::ChainP2}, 1, kUnbounded,
         {}, any_params},
        {Clause::UnicyclicEvenCycle, F::Unicyclic, "unicyclic/even-cycle", 4, V::Bivalent, {K::EvenCycle}, 1, 1, {},
         any_params},
        {Clause::UnicyclicSoftStars, F::Unicyclic, "unicyclic/soft-stars", 1, V::Trivalent, {K::SoftStar}, 1,
         kUnbounded, {K::IsolatedZeros}, any_params},
        {Clause::UnicyclicCycle4k, F::Unicyclic, "unicyclic/cycle-4k", 2, V::Trivalent, {K::Cycle4k}, 1, 1,
         {K::ChainP2, K::IsolatedZeros}, any_params},
        {Clause::UnicyclicCycle3k, F::Unicyclic, "unicyclic/cycle-3k", 3, V::Trivalent, {K::Cycle3k}, 1, 1,
         {K::IsolatedZeros}, any_params},

        {Clause::BicyclicP2Chains, F::Bicyclic, "bicyclic/p2-chains", 2, V::Bivalent, {K::ChainP2}, 1, kUnbounded,
         {}, any_params},
        {Clause::BicyclicEvenCycleLink, F::Bicyclic, "bicyclic/even-cycle-with-link", 4, V::Bivalent,
         {K::EvenCycle}, 1, 1, {}, any_params},
        {Clause::BicyclicTwoEvenCycles, F::Bicyclic, "bicyclic/two-even-cycles", 4, V::Bivalent, {K::EvenCycle}, 2,
         2, {}, any_params},
        {Clause::BicyclicSoftStars, F::Bicyclic, "bicyclic/soft-stars", 1, V::Trivalent, {K::SoftStar}, 1,
         kUnbounded, {K::IsolatedZeros}, any_params},
        {Clause::BicyclicB1Lambda2, F::Bicyclic, "bicyclic/b1-lambda2", 2, V::Trivalent, {K::B1}, 1, 1,
         {K::ChainP2, K::IsolatedZeros}, b1_lambda2_params},
        {Clause::BicyclicB1Lambda3, F::Bicyclic, "bicyclic/b1-lambda3", 3, V::Trivalent, {K::B1}, 1, 1,
         {K::IsolatedZeros}, thirds_params},
        {Clause::BicyclicB3Lambda3, F::Bicyclic, "bicyclic/b3-lambda3", 3, V::Trivalent, {K::B3}, 1, 1,
         {K::IsolatedZeros}, thirds_params},
        {Clause::BicyclicB3Lambda4, F::Bicyclic, "bicyclic/b3-lambda4", 4, V::Trivalent, {K::B3}, 1, 1,
         {K::IsolatedZeros}, b3_lambda4_params},
        {Clause::BicyclicCycle4kLinked, F::Bicyclic, "bicyclic/cycle-4k-linked", 2, V::Trivalent, {K::Cycle4k}, 1,
         2, {K::ChainP2, K::IsolatedZeros}, any_params},
        {Clause::BicyclicCycle3kLinked, F::Bicyclic, "bicyclic/cycle-3k-linked", 3, V::Trivalent, {K::Cycle3k}, 1,
         2, {K::IsolatedZeros}, any_params},

        {Clause::CactusP2Chains, F::Cactus, "cactus/p2-chains", 2, V::Bivalent, {K::ChainP2}, 1, kUnbounded, {},
         any_params},
        {Clause::CactusEvenCycles, F::Cactus, "cactus/even-cycles", 4, V::Bivalent, {K::EvenCycle}, 1, kUnbounded,
         {}, any_params},
        {Clause::CactusSoftStars, F::Cactus, "cactus/soft-stars", 1, V::Trivalent, {K::SoftStar}, 1, kUnbounded,
         {K::IsolatedZeros}, any_params},
        {Clause::CactusCycles4k, F::Cactus, "cactus/soft-glued-even-cycles", 2, V::Trivalent,
         {K::Cycle4k, K::B1, K::GluedCycles}, 1, kUnbounded, {K::ChainP2, K::IsolatedZeros}, even_cactus_params},
        {Clause::CactusCycles3k, F::Cactus, "cactus/soft-glued-cycles-3k", 3, V::Trivalent,
         {K::Cycle3k, K::B1, K::GluedCycles}, 1, kUnbounded, {K::IsolatedZeros}, third_cactus_params},
    };
    return table;
}

const Rule* find_rule(Clause id) {
    for (const Rule& r : rules()) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

bool contains(const std::vector<K>& kinds, K k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); }

bool rule_holds(const Rule& r, const Certificate& c, const Decomposition& d) {
    if (c.lambda() != r.lambda || c.valence() != r.valence) return false;
    int anchors = 0;
    for (const Component& comp : d.components) {
        const ComponentClass& cls = comp.cls;
        if (contains(r.anchor, cls.kind)) {
            if (cls.lambda != r.lambda || !r.params(cls)) return false;
            ++anchors;
        } else if (!contains(r.allowed, cls.kind)) {
            return false;
        } else if (cls.kind != K::IsolatedZeros && cls.lambda != r.lambda) {
            return false;
        }
    }
    return anchors >= r.min_anchor && anchors <= r.max_anchor;
}

void require_connected_with(const Graph& g, std::int64_t cyclomatic, const char* what) {
    if (!is_connected(g) || cyclomatic_number(g) != cyclomatic) {
        throw ContractViolation(std::string(what) + ": graph is not in the family");
    }
}

// Vertex sequences of the walks leaving `from` until `stop` is reached. Every
// intermediate vertex has degree 2; a cycle through `from` is reported once.
std::vector<std::vector<Vertex>> walks(const Graph& g, Vertex from, Vertex stop) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> used(g.order(), false);
    for (Vertex first : g.neighbors(from)) {
        if (used[first]) continue;
        std::vector<Vertex> seq{from};
        Vertex prev = from;
        Vertex cur = first;
        while (cur != stop) {
            seq.push_back(cur);
            used[cur] = true;
            const auto nb = g.neighbors(cur);
            const Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        seq.push_back(stop);
        out.push_back(std::move(seq));
    }
    return out;
}

void add_pattern(std::vector<Certificate>& out, const std::shared_ptr<const Graph>& g, std::vector<std::int8_t> values) {
    const Valuation v(std::move(values));
    Certificate c(g, v);
    for (const Certificate& have : out) {
        if (have.valuation() == c.valuation()) return;
    }
    out.push_back(std::move(c));
}

std::vector<Certificate> b1_patterns(const std::shared_ptr<const Graph>& g, Vertex hub) {
    std::vector<Certificate> out;
    const auto cycles = walks(*g, hub, hub);   // each sequence starts and ends at the hub
    if (cycles.size() != 2) return out;
    std::array<int, 2> len{};
    for (int k = 0; k < 2; ++k) len[k] = static_cast<int>(cycles[k].size()) - 1;

    // Along a cycle from the hub: lambda 2 repeats (0,s,0,-s), lambda 3 repeats (0,s,-s).
    const auto fill = [&](int period, const std::array<int, 2>& signs) {
        std::vector<std::int8_t> values(g->order(), 0);
        for (int k = 0; k < 2; ++k) {
            for (int i = 1; i < len[k]; ++i) {
                int x = 0;
                if (period == 4) x = i % 4 == 1 ? 1 : (i % 4 == 3 ? -1 : 0);
                else x = i % 3 == 1 ? 1 : (i % 3 == 2 ? -1 : 0);
                values[cycles[k][static_cast<std::size_t>(i)]] = static_cast<std::int8_t>(x * signs[k]);
            }
        }
        return values;
    };
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            if (len[0] % 4 == 0 && len[1] % 4 == 0) add_pattern(out, g, fill(4, {s1, s2}));
            if (len[0] % 4 == 2 && len[1] % 4 == 2 && s1 == -s2) add_pattern(out, g, fill(4, {s1, s2}));
            if (len[0] % 3 == 0 && len[1] % 3 == 0) add_pattern(out, g, fill(3, {s1, s2}));
        }
    }
    return out;
}

std::vector<Certificate> b3_patterns(const std::shared_ptr<const Graph>& g, Vertex u, Vertex v,
                                     const std::vector<int>& params) {
    std::vector<Certificate> out;
    std::vector<std::int8_t> values(g->order(), 0);
    if (b3_lambda4(params)) {
        // u = 1, v = -1, the even chain alternates, the middles of the 3-chains are 0.
        for (const auto& chain : walks(*g, u, v)) {
            if (chain.size() == 3) continue;
            for (std::size_t i = 0; i < chain.size(); ++i) values[chain[i]] = static_cast<std::int8_t>(i % 2 == 0 ? 1 : -1);
        }
        add_pattern(out, g, values);
        std::fill(values.begin(), values.end(), 0);
    }
    if (!all_divisible(params, 3)) return out;
    // Each chain from u reads (1, 0, -1) repeated and ends at v = -1.
    for (const auto& chain : walks(*g, u, v)) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            values[chain[i]] = static_cast<std::int8_t>(i % 3 == 0 ? 1 : (i % 3 == 2 ? -1 : 0));
        }
    }
    add_pattern(out, g, values);
    return out;
}

std::vector<int> family_lambdas(FamilyKind family) {
    if (family == FamilyKind::Tree) return {1, 2};
    return {1, 2, 3, 4};
}

FamilyReport run(const Graph& g, FamilyKind family, RecognizeOptions options,
                 const std::vector<Certificate>& patterns) {
    FamilyReport report;
    report.family = family;
    report.exhaustive = true;
    auto shared = std::make_shared<const Graph>(g);

    const auto finding = [&](const Certificate& c, SolutionCount count) {
        const Decomposition d = decompose(c);
        return Finding{c.lambda(), c, match_clause(family, c, d), count};
    };

    TernarySolver solver(g);
    for (int lambda : family_lambdas(family)) {
        if (static_cast<std::size_t>(lambda) > g.order()) break;
        const std::size_t limit = options.enumerate_all ? std::numeric_limits<std::size_t>::max() : 1;
        const TernarySolutions sols = solver.solve(lambda, limit);
        if (sols.count == 0) continue;

        std::vector<Certificate> chosen;
        for (const Certificate& p : patterns) {
            if (p.lambda() == lambda) chosen.push_back(p);
        }
        if (options.enumerate_all) {
            std::set<Valuation> seen;
            for (const Certificate& c : chosen) seen.insert(c.valuation());
            for (const Valuation& v : sols.valuations) {
                if (seen.insert(v).second) chosen.emplace_back(shared, v, lambda);
            }
            std::sort(chosen.begin(), chosen.end(), [](const Certificate& a, const Certificate& b) {
                return a.valuation() < b.valuation();
            });
            for (const Certificate& c : chosen) report.found.push_back(finding(c, 1));
        } else {
            // Prefer the closed-form pattern as the representative.
            if (chosen.empty()) chosen.emplace_back(shared, sols.valuations.front(), lambda);
            report.found.push_back(finding(chosen.front(), sols.count));
        }
    }
    return report;
}

} // namespace

std::string to_string(Clause clause) {
    if (clause == Clause::Unmatched) return "unmatched";
    return find_rule(clause)->name;
}

FamilyKind family_of(Clause clause) {
    if (clause == Clause::Unmatched) return FamilyKind::General;
    return find_rule(clause)->family;
}

bool clause_holds(Clause clause, const Certificate& c, const Decomposition& d) {
    const Rule* r = find_rule(clause);
    return r != nullptr && rule_holds(*r, c, d);
}

Clause match_clause(FamilyKind family, const Certificate& c, const Decomposition& d) {
    for (const Rule& r : rules()) {
        if (r.family == family && rule_holds(r, c, d)) return r.id;
    }
    return Clause::Unmatched;
}

std::vector<int> FamilyReport::lambdas() const {
    std::vector<int> out;
    for (const Finding& f : found) out.push_back(f.lambda);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<int, Valuation>> FamilyReport::pairs() const {
    std::vector<std::pair<int, Valuation>> out;
    for (const Finding& f : found) out.emplace_back(f.lambda, f.certificate.valuation());
    std::sort(out.begin(), out.end());
    return out;
}

FamilyReport recognize_tree(const Graph& g, RecognizeOptions options) {
    require_connected_with(g, 0, "recognize_tree");
    return run(g, FamilyKind::Tree, options, {});
}

FamilyReport recognize_unicyclic(const Graph& g, RecognizeOptions options) {
    require_connected_with(g, 1, "recognize_unicyclic");
    return run(g, FamilyKind::Unicyclic, options, {});
}

FamilyReport recognize_bicyclic(const Graph& g, RecognizeOptions options) {
    require_connected_with(g, 2, "recognize_bicyclic");
    std::vector<Certificate> patterns;
    if (bicyclic_shape(g).type != BicyclicShape::Type::WithLeaves) patterns = bicyclic_pattern_certificates(g);
    return run(g, FamilyKind::Bicyclic, options, patterns);
}

FamilyReport recognize_cactus(const Graph& g, RecognizeOptions options) {
    if (!is_cactus(g)) throw ContractViolation("recognize_cactus: graph is not a cactus");
    return run(g, FamilyKind::Cactus, options, {});
}

FamilyReport recognize(const Graph& g, RecognizeOptions options) {
    if (g.order() == 0 || !is_connected(g)) throw Rejected("recognize: graph is not connected");
    switch (cyclomatic_number(g)) {
    case 0: return recognize_tree(g, options);
    case 1: return recognize_unicyclic(g, options);
    case 2: return recognize_bicyclic(g, options);
    default: break;
    }
    if (is_cactus(g)) return recognize_cactus(g, options);
    throw Rejected("recognize: graph is not a tree, unicyclic, bicyclic or cactus graph");
}

std::vector<Certificate> bicyclic_pattern_certificates(const Graph& g) {
    const BicyclicShape shape = bicyclic_shape(g);
    if (shape.type == BicyclicShape::Type::WithLeaves) {
        throw ContractViolation("bicyclic_pattern_certificates: graph has a leaf");
    }
    auto shared = std::make_shared<const Graph>(g);
    std::vector<Vertex> hubs;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) > 2) hubs.push_back(x);
    }
    std::vector<Certificate> out;
    if (shape.type == BicyclicShape::Type::B1) out = b1_patterns(shared, hubs.at(0));
    if (shape.type == BicyclicShape::Type::B3) out = b3_patterns(shared, hubs.at(0), hubs.at(1), shape.params);
    std::sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
        return std::pair(a.lambda(), a.valuation()) < std::pair(b.lambda(), b.valuation());
    });
    return out;
}

} // namespace ternvec
