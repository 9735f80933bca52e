#include "ternvec/valuation.hpp"

#include <algorithm>

#include <json.hpp>

#include "ternvec/errors.hpp"
#include "ternvec/graph_io.hpp"

namespace ternvec {

Valuation::Valuation(std::vector<std::int8_t> values) : values_(std::move(values)) {
    bool nonzero = false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < -1 || values_[i] > 1) {
            throw ContractViolation("valuation entry " + std::to_string(i) + " outside {-1,0,1}");
        }
        nonzero = nonzero || values_[i] != 0;
    }
    if (!nonzero) throw ContractViolation("the all-zero vector is not a valuation");
}

Valuation::Valuation(std::initializer_list<int> values)
    : Valuation([&] {
          std::vector<std::int8_t> v;
          v.reserve(values.size());
          for (int x : values) {
              if (x < -1 || x > 1) throw ContractViolation("valuation entry outside {-1,0,1}");
              v.push_back(static_cast<std::int8_t>(x));
          }
          return v;
      }()) {}

bool Valuation::is_bivalent() const {
    return std::none_of(values_.begin(), values_.end(), [](std::int8_t x) { return x == 0; });
}

Valuation Valuation::negated() const {
    std::vector<std::int8_t> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [](std::int8_t x) { return static_cast<std::int8_t>(-x); });
    return Valuation(std::move(out));
}

bool Valuation::is_canonical() const {
    const auto it = std::find_if(values_.begin(), values_.end(), [](std::int8_t x) { return x != 0; });
    return *it > 0;
}

Valuation Valuation::canonical() const {
    return is_canonical() ? *this : negated();
}

std::string Valuation::to_string() const {
    std::string s;
    s.reserve(values_.size());
    for (std::int8_t x : values_) s.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
    return s;
}

Valuation Valuation::parse(std::string_view text) {
    std::vector<std::int8_t> values;
    values.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '+': values.push_back(1); break;
        case '-': values.push_back(-1); break;
        case '0': values.push_back(0); break;
        default:
            throw ParseError("valuation: unexpected character at offset " + std::to_string(i), i);
        }
    }
    if (std::all_of(values.begin(), values.end(), [](std::int8_t x) { return x == 0; })) {
        throw ParseError("valuation: all entries are zero", 0);
    }
    return Valuation(std::move(values));
}

std::optional<int> verify(const Graph& g, const Valuation& v) {
    if (v.size() != g.order()) {
        throw ContractViolation("verify: valuation length " + std::to_string(v.size()) + " != graph order " +
                                std::to_string(g.order()));
    }
    std::optional<int> lambda;
    for (Vertex i = 0; i < g.order(); ++i) {
        int sum = 0;
        for (Vertex j : g.neighbors(i)) sum += v[j];
        if (v[i] == 0) {
            if (sum != 0) return std::nullopt;
            continue;
        }
        // (d_i v_i - sum) / v_i with v_i = +-1.
        const int here = static_cast<int>(g.degree(i)) - sum * v[i];
        if (lambda && *lambda != here) return std::nullopt;
        lambda = here;
    }
    if (!lambda || *lambda < 1) return std::nullopt;
    return lambda;
}

int hard_degree(const Graph& g, const Valuation& v, Vertex j) {
    if (v.size() != g.order()) throw ContractViolation("hard_degree: valuation length differs from graph order");
    if (j >= g.order()) throw ContractViolation("hard_degree: vertex out of range");
    int count = 0;
    for (Vertex k : g.neighbors(j)) count += v[k] != 0 ? 1 : 0;
    return count;
}

std::vector<Vertex> soft_nodes(const Graph& g, const Valuation& v) {
    if (v.size() != g.order()) throw ContractViolation("soft_nodes: valuation length differs from graph order");
    std::vector<Vertex> out;
    for (Vertex j = 0; j < g.order(); ++j) {
        if (v[j] == 0) out.push_back(j);
    }
    return out;
}

std::vector<Edge> equal_links(const Graph& g, std::span<const std::int8_t> values) {
    if (values.size() != g.order()) throw ContractViolation("equal_links: valuation length differs from graph order");
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (values[e.u] == values[e.v]) out.push_back(e);
    }
    return out;
}

std::string to_string(Valence v) {
    return v == Valence::Bivalent ? "bivalent" : "trivalent";
}

Certificate::Certificate(Graph g, const Valuation& v)
    : Certificate(std::make_shared<const Graph>(std::move(g)), v) {}

Certificate::Certificate(std::shared_ptr<const Graph> g, const Valuation& v)
    : graph_(std::move(g)), valuation_(v.canonical()) {
    const auto lambda = verify(*graph_, valuation_);
    if (!lambda) {
        throw ContractViolation("valuation " + v.to_string() + " is not a Laplacian eigenvector with lambda >= 1");
    }
    lambda_ = *lambda;
}

Certificate::Certificate(std::shared_ptr<const Graph> g, const Valuation& v, int lambda)
    : Certificate(std::move(g), v) {
    if (lambda_ != lambda) {
        throw ContractViolation("certificate eigenvalue is " + std::to_string(lambda_) + ", not " +
                                std::to_string(lambda));
    }
}

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["graph"] = to_graph6(*graph_);
    j["valuation"] = valuation_.to_string();
    j["lambda"] = lambda_;
    return j.dump();
}

Certificate Certificate::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("graph") || !j.contains("valuation") || !j.contains("lambda") ||
        !j["graph"].is_string() || !j["valuation"].is_string() || !j["lambda"].is_number_integer()) {
        throw ParseError("certificate: expected {graph: string, valuation: string, lambda: int}", 0);
    }
    Graph g = parse_graph6(j["graph"].get<std::string>());
    const Valuation v = Valuation::parse(j["valuation"].get<std::string>());
    return Certificate(std::make_shared<const Graph>(std::move(g)), v, j["lambda"].get<int>());
}

std::vector<Edge> equal_links(const Certificate& c) {
    return equal_links(c.graph(), c.valuation().values());
}

bool LocalCheck::all_pass() const {
    return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

LocalCheck trivalent_local_check(const Graph& g, const Valuation& v, int lambda) {
    if (v.size() != g.order()) throw ContractViolation("trivalent_local_check: length mismatch");
    if (!equal_links(g, v.values()).empty()) {
        throw ContractViolation("trivalent_local_check: valuation has equal links");
    }
    LocalCheck out;
    out.pass.resize(g.order());
    for (Vertex j = 0; j < g.order(); ++j) {
        if (v[j] != 0) {
            out.pass[j] = lambda == static_cast<int>(g.degree(j)) + hard_degree(g, v, j);
        } else {
            int plus = 0;
            int minus = 0;
            for (Vertex k : g.neighbors(j)) {
                plus += v[k] > 0 ? 1 : 0;
                minus += v[k] < 0 ? 1 : 0;
            }
            out.pass[j] = plus == minus;
        }
    }
    return out;
}

} // namespace ternvec
