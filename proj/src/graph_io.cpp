#include "ternvec/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ternvec/errors.hpp"

namespace ternvec {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    text = trim_line_end(text);
    std::size_t base = 0;
    if (text.starts_with(kGraph6Prefix)) {
        text.remove_prefix(kGraph6Prefix.size());
        base = kGraph6Prefix.size();
    }
    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw ParseError("graph6: truncated input at byte " + std::to_string(base + i), base + i);
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) {
            throw ParseError("graph6: byte " + std::to_string(base + i) + " outside 63..126", base + i);
        }
        return c - 63U;
    };

    if (text.empty()) throw ParseError("graph6: empty input", base);
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = byte_at(0);
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6U) | byte_at(i);
        if (n < 258048) throw ParseError("graph6: non-canonical 8-byte length header", base);
        pos = 8;
    } else {
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6U) | byte_at(i);
        if (n < 63) throw ParseError("graph6: non-canonical 4-byte length header", base);
        pos = 4;
    }

    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() != pos + groups) {
        const std::size_t at = std::min(text.size(), pos + groups);
        throw ParseError("graph6: expected " + std::to_string(groups) + " data bytes after the header, found " +
                             std::to_string(text.size() - pos) + " (byte " + std::to_string(base + at) + ")",
                         base + at);
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const unsigned group = byte_at(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (groups > 0) {
        const unsigned last = byte_at(pos + groups - 1);
        const std::size_t padding = groups * 6 - bits;
        if (last & ((1U << padding) - 1U)) {
            throw ParseError("graph6: nonzero padding bits in byte " + std::to_string(base + pos + groups - 1),
                             base + pos + groups - 1);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
    }
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1U) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
    }
    return lines;
}

std::size_t parse_id(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("edge list line " + std::to_string(line) + ": '" + std::string(token) +
                             "' is not a vertex id",
                         line);
    }
    return value;
}

Graph build_checked(std::size_t n, const std::vector<std::pair<Edge, std::size_t>>& edges) {
    std::vector<std::pair<Edge, std::size_t>> sorted = edges;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i - 1].first) {
            const auto line = std::max(sorted[i].second, sorted[i - 1].second);
            throw ParseError("edge list line " + std::to_string(line) + ": duplicate edge " +
                                 std::to_string(sorted[i].first.u) + " " + std::to_string(sorted[i].first.v),
                             line);
        }
    }
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto& [e, line] : edges) plain.push_back(e);
    return Graph::from_edges(n, plain);
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    const auto lines = tokenize(text);
    std::optional<std::size_t> declared;
    std::vector<std::pair<Edge, std::size_t>> edges;
    std::size_t n = 0;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens.front() == "n") {
            if (k != 0 || line.tokens.size() != 2) {
                throw ParseError("edge list line " + std::to_string(line.number) +
                                     ": 'n <count>' must be the first directive",
                                 line.number);
            }
            declared = parse_id(line.tokens[1], line.number);
            continue;
        }
        if (line.tokens.size() != 2) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": expected 'u v'", line.number);
        }
        const std::size_t a = parse_id(line.tokens[0], line.number);
        const std::size_t b = parse_id(line.tokens[1], line.number);
        if (a == b) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": self-loop at " + std::to_string(a),
                             line.number);
        }
        if (declared && (a >= *declared || b >= *declared)) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": vertex id out of range for n=" +
                                 std::to_string(*declared),
                             line.number);
        }
        if (std::max(a, b) >= (std::size_t{1} << 31)) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": vertex id too large", line.number);
        }
        n = std::max(n, std::max(a, b) + 1);
        edges.emplace_back(Edge(static_cast<Vertex>(a), static_cast<Vertex>(b)), line.number);
    }
    return build_checked(declared.value_or(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

LabeledGraph parse_labeled_edge_list(std::string_view text) {
    LabeledGraph result;
    std::vector<std::pair<Edge, std::size_t>> edges;
    auto id_of = [&](std::string_view label) {
        auto [it, inserted] = result.ids.try_emplace(std::string(label), static_cast<Vertex>(result.labels.size()));
        if (inserted) result.labels.emplace_back(label);
        return it->second;
    };
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() == 1) {
            id_of(line.tokens[0]);
            continue;
        }
        if (line.tokens.size() != 2) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": expected 'a b'", line.number);
        }
        if (line.tokens[0] == line.tokens[1]) {
            throw ParseError("edge list line " + std::to_string(line.number) + ": self-loop at " +
                                 std::string(line.tokens[0]),
                             line.number);
        }
        const Vertex a = id_of(line.tokens[0]);
        const Vertex b = id_of(line.tokens[1]);
        edges.emplace_back(Edge(a, b), line.number);
    }
    result.graph = build_checked(result.labels.size(), edges);
    return result;
}

std::string to_dot(const Graph& g, std::optional<std::span<const std::int8_t>> values, std::string_view name) {
    if (values && values->size() != g.order()) {
        throw ContractViolation("to_dot: valuation length differs from graph order");
    }
    std::ostringstream out;
    out << "graph " << name << " {\n";
    if (g.order() > 0) out << "  node [style=filled];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (values) {
            const int x = (*values)[v];
            const char* fill = x > 0 ? "tomato" : (x < 0 ? "steelblue" : "white");
            const char* label = x > 0 ? "+1" : (x < 0 ? "-1" : "0");
            out << " [label=\"" << v << ":" << label << "\", fillcolor=" << fill << "]";
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace ternvec
