#include "ternvec/search.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <queue>

#include "ternvec/errors.hpp"

namespace ternvec {

namespace {

bool certificate_less(const Certificate& a, const Certificate& b) {
    if (a.lambda() != b.lambda()) return a.lambda() < b.lambda();
    return a.valuation() < b.valuation();
}

bool certificate_equal(const Certificate& a, const Certificate& b) {
    return a.lambda() == b.lambda() && a.valuation() == b.valuation();
}

} // namespace

SearchResult::SearchResult(std::vector<Certificate> certificates, SearchStats stats)
    : certificates_(std::move(certificates)), stats_(stats) {
    normalize();
}

void SearchResult::normalize() {
    std::sort(certificates_.begin(), certificates_.end(), certificate_less);
    certificates_.erase(std::unique(certificates_.begin(), certificates_.end(), certificate_equal),
                        certificates_.end());
}

std::map<int, std::size_t> SearchResult::lambda_counts() const {
    std::map<int, std::size_t> counts;
    for (const auto& c : certificates_) ++counts[c.lambda()];
    return counts;
}

std::vector<int> SearchResult::lambdas() const {
    std::vector<int> out;
    for (const auto& [lambda, count] : lambda_counts()) out.push_back(lambda);
    return out;
}

std::vector<Certificate> SearchResult::with_lambda(int lambda) const {
    std::vector<Certificate> out;
    for (const auto& c : certificates_) {
        if (c.lambda() == lambda) out.push_back(c);
    }
    return out;
}

void SearchResult::merge(const SearchResult& other) {
    certificates_.insert(certificates_.end(), other.certificates_.begin(), other.certificates_.end());
    stats_.nodes += other.stats_.nodes;
    stats_.prunes += other.stats_.prunes;
    normalize();
}

bool SearchResult::same_certificates(const SearchResult& other) const {
    return std::equal(certificates_.begin(), certificates_.end(), other.certificates_.begin(),
                      other.certificates_.end(), certificate_equal);
}

SearchResult brute_force(const Graph& g, BruteForceOptions options) {
    const std::size_t n = g.order();
    if (n > options.max_order || n > 40) {
        throw Rejected("brute_force: order " + std::to_string(n) + " exceeds the bound " +
                       std::to_string(std::min<std::size_t>(options.max_order, 40)));
    }
    std::vector<std::uint64_t> adj(n, 0);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
        deg[v] = static_cast<int>(g.degree(v));
    }

    auto graph = std::make_shared<const Graph>(g);
    std::vector<Certificate> found;
    SearchStats stats;
    const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);

    // Support S = nonzero positions; the lowest one is +1, the rest of the
    // minus set M ranges over subsets of S without it.
    for (std::uint64_t support = 1; support <= all && support != 0; ++support) {
        const std::uint64_t low = support & (~support + 1);
        const std::uint64_t rest = support ^ low;
        const int first = std::countr_zero(low);
        const int half = std::popcount(support) / 2;
        if (options.bulk_rejection) {
            if (std::popcount(support) % 2 != 0) {
                ++stats.prunes;
                continue;
            }
            bool odd = false;
            for (std::size_t i = 0; i < n && !odd; ++i) {
                odd = !((support >> i) & 1U) && std::popcount(adj[i] & support) % 2 != 0;
            }
            if (odd) {
                ++stats.prunes;
                continue;
            }
        }
        std::uint64_t minus = rest;
        while (true) {
            if (options.bulk_rejection && std::popcount(minus) != half) {
                if (minus == 0) break;
                minus = (minus - 1) & rest;
                continue;
            }
            ++stats.nodes;
            const std::uint64_t plus = support ^ minus;
            const int s0 = std::popcount(adj[first] & plus) - std::popcount(adj[first] & minus);
            const int lambda = deg[first] - s0;
            bool ok = lambda >= 1;
            for (std::size_t i = 0; ok && i < n; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << i;
                const int s = std::popcount(adj[i] & plus) - std::popcount(adj[i] & minus);
                if (plus & bit) {
                    ok = deg[i] - s == lambda;
                } else if (minus & bit) {
                    ok = deg[i] + s == lambda;
                } else {
                    ok = s == 0;
                }
            }
            if (ok) {
                std::vector<std::int8_t> values(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::uint64_t bit = std::uint64_t{1} << i;
                    values[i] = (plus & bit) ? 1 : ((minus & bit) ? -1 : 0);
                }
                found.emplace_back(graph, Valuation(std::move(values)), lambda);
            }
            if (minus == 0) break;
            minus = (minus - 1) & rest;
        }
    }
    return SearchResult(std::move(found), stats);
}

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, int lambda, bool prune)
        : g_(g), lambda_(lambda), prune_(prune), graph_(std::make_shared<const Graph>(g)) {
        const std::size_t n = g.order();
        coef_.resize(n);
        value_.assign(n, 0);
        sum_.assign(n, 0);
        open_.resize(n);
        assigned_.assign(n, false);
        for (Vertex v = 0; v < n; ++v) {
            coef_[v] = static_cast<int>(g.degree(v)) - lambda;
            open_[v] = static_cast<int>(g.degree(v));
        }
        order_ = assignment_order();
    }

    SearchResult run() {
        descend(0);
        return SearchResult(std::move(found_), stats_);
    }

private:
    std::vector<Vertex> assignment_order() const {
        const std::size_t n = g_.order();
        std::vector<Vertex> order;
        std::vector<bool> seen(n, false);
        order.reserve(n);
        while (order.size() < n) {
            Vertex start = 0;
            bool have = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!seen[v] && (!have || g_.degree(v) > g_.degree(start))) {
                    start = v;
                    have = true;
                }
            }
            std::queue<Vertex> queue;
            seen[start] = true;
            queue.push(start);
            while (!queue.empty()) {
                const Vertex x = queue.front();
                queue.pop();
                order.push_back(x);
                for (Vertex y : g_.neighbors(x)) {
                    if (!seen[y]) {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        return order;
    }

    // The assigned vertex v can still meet its equation.
    bool assigned_ok(Vertex v) const {
        const int gap = coef_[v] * value_[v] - sum_[v];
        return gap <= open_[v] && -gap <= open_[v];
    }

    // Some value of the unassigned vertex v can still meet its equation.
    bool open_ok(Vertex v) const {
        for (int x = -1; x <= 1; ++x) {
            const int gap = coef_[v] * x - sum_[v];
            if (gap <= open_[v] && -gap <= open_[v]) return true;
        }
        return false;
    }

    void set(Vertex x, int value) {
        value_[x] = value;
        assigned_[x] = true;
        for (Vertex y : g_.neighbors(x)) {
            sum_[y] += value;
            --open_[y];
        }
    }

    void unset(Vertex x) {
        for (Vertex y : g_.neighbors(x)) {
            sum_[y] -= value_[x];
            ++open_[y];
        }
        value_[x] = 0;
        assigned_[x] = false;
    }

    bool consistent_after(Vertex x) const {
        if (!assigned_ok(x)) return false;
        for (Vertex y : g_.neighbors(x)) {
            if (assigned_[y] ? !assigned_ok(y) : !open_ok(y)) return false;
        }
        return true;
    }

    void emit() {
        const std::size_t n = g_.order();
        if (!prune_) {
            for (Vertex v = 0; v < n; ++v) {
                if (coef_[v] * value_[v] != sum_[v]) return;
            }
        }
        std::vector<std::int8_t> values(n);
        bool nonzero = false;
        int first = 0;
        for (Vertex v = 0; v < n; ++v) {
            values[v] = static_cast<std::int8_t>(value_[v]);
            if (!nonzero && value_[v] != 0) first = value_[v];
            nonzero = nonzero || value_[v] != 0;
        }
        // -v is found on another branch; keep the canonical sign only.
        if (!nonzero || first < 0) return;
        found_.emplace_back(graph_, Valuation(std::move(values)), lambda_);
    }

    void descend(std::size_t pos) {
        if (pos == order_.size()) {
            emit();
            return;
        }
        const Vertex x = order_[pos];
        for (int value : {1, 0, -1}) {
            ++stats_.nodes;
            set(x, value);
            if (!prune_ || consistent_after(x)) {
                descend(pos + 1);
            } else {
                ++stats_.prunes;
            }
            unset(x);
        }
    }

    const Graph& g_;
    int lambda_;
    bool prune_;
    std::shared_ptr<const Graph> graph_;
    std::vector<int> coef_;
    std::vector<int> value_;
    std::vector<int> sum_;
    std::vector<int> open_;
    std::vector<bool> assigned_;
    std::vector<Vertex> order_;
    std::vector<Certificate> found_;
    SearchStats stats_;
};

} // namespace

SearchResult csp_search(const Graph& g, int lambda, CspOptions options) {
    if (lambda < 1 || static_cast<std::size_t>(lambda) > g.order()) {
        throw ContractViolation("csp_search: lambda " + std::to_string(lambda) + " outside 1.." +
                                std::to_string(g.order()));
    }
    return Backtracker(g, lambda, options.prune).run();
}

SearchResult full_spectrum(const Graph& g, SpectrumOptions options) {
    const int top = static_cast<int>(g.order());
    SearchResult merged;
    if (options.jobs <= 1 || top <= 1) {
        for (int lambda = 1; lambda <= top; ++lambda) merged.merge(csp_search(g, lambda, options.csp));
        return merged;
    }
    const unsigned workers = std::min<unsigned>(options.jobs, static_cast<unsigned>(top));
    std::vector<std::future<SearchResult>> parts;
    parts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&g, w, workers, top, csp = options.csp] {
            SearchResult part;
            for (int lambda = static_cast<int>(w) + 1; lambda <= top; lambda += static_cast<int>(workers)) {
                part.merge(csp_search(g, lambda, csp));
            }
            return part;
        }));
    }
    for (auto& part : parts) merged.merge(part.get());
    return merged;
}

} // namespace ternvec
