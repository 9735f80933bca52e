#include "ternvec/census.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ternvec/enumerate.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/recognize.hpp"
#include "ternvec/search.hpp"

namespace ternvec {

namespace {

using Pairs = std::vector<std::pair<int, Valuation>>;

Pairs pairs_of(const SearchResult& r) {
    Pairs out;
    for (const Certificate& c : r.certificates()) out.emplace_back(c.lambda(), c.valuation());
    return out;
}

bool in_families(const Family& f) {
    return f.has(FamilyKind::Tree) || f.has(FamilyKind::Unicyclic) || f.has(FamilyKind::Bicyclic) ||
           f.has(FamilyKind::Cactus);
}

bool has_leaf(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) return true;
    }
    return false;
}

// P2, or a star whose centre is soft.
bool chain_or_soft_star(const Certificate& c) {
    const Graph& g = c.graph();
    const std::size_t n = g.order();
    if (n == 2 && g.size() == 1) return true;
    if (n < 3 || g.size() != n - 1) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) return c.valuation()[v] == 0;
    }
    return false;
}

std::vector<CensusEntry> entries_of(const SearchResult& r) {
    std::map<std::pair<int, Valence>, CensusEntry> grouped;
    for (const Certificate& c : r.certificates()) {
        auto [it, fresh] = grouped.try_emplace({c.lambda(), c.valence()});
        CensusEntry& e = it->second;
        if (fresh) {
            e.lambda = c.lambda();
            e.valence = c.valence();
            e.example = c.valuation().to_string();
        }
        ++e.count;
    }
    std::vector<CensusEntry> out;
    for (auto& [key, e] : grouped) out.push_back(std::move(e));
    return out;
}

void check_families(const Graph& g, const SearchResult& oracle, CensusRow& row) {
    for (const Certificate& c : oracle.certificates()) {
        if (c.lambda() < 1 || c.lambda() > 4) {
            row.problems.push_back("eigenvalue " + std::to_string(c.lambda()) + " outside {1,2,3,4}: " +
                                   c.valuation().to_string());
        }
    }
    const FamilyReport report = recognize(g, {.enumerate_all = true});
    if (report.pairs() != pairs_of(oracle)) {
        row.problems.push_back("recognizer (" + std::to_string(report.found.size()) + " certificates) disagrees with "
                               "brute_force (" + std::to_string(oracle.size()) + ")");
    }
    for (const Finding& f : report.found) {
        if (f.clause == Clause::Unmatched || !clause_holds(f.clause, f.certificate, decompose(f.certificate))) {
            row.problems.push_back("no clause covers lambda " + std::to_string(f.lambda) + " " +
                                   f.certificate.valuation().to_string());
        }
    }
}

void check_leaf_rule(const Graph& g, const SearchResult& r, CensusRow& row) {
    if (!has_leaf(g) || !is_connected(g)) return;
    for (const Certificate& c : r.certificates()) {
        if (equal_links(c).empty() && !chain_or_soft_star(c)) {
            row.problems.push_back("equal-link-free certificate on a graph with a leaf that is neither P2 nor a "
                                   "soft-centred star: " + c.valuation().to_string());
        }
    }
}

} // namespace

std::optional<CensusRow> census_row(const Graph& g, const CensusOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CensusRow row;
    row.family = classify_family(g);
    if (options.families && !in_families(row.family)) return std::nullopt;
    row.graph6 = to_graph6(g);
    try {
        const bool want_oracle = (options.oracle_check || options.families) && g.order() <= options.oracle_max_order;
        const bool want_spectrum = !options.families || options.oracle_check || !want_oracle;
        std::optional<SearchResult> oracle;
        std::optional<SearchResult> spectrum;
        if (want_oracle) oracle = brute_force(g, {.max_order = options.oracle_max_order});
        if (want_spectrum) spectrum = full_spectrum(g);
        row.oracle_checked = oracle.has_value();

        const SearchResult& main = spectrum ? *spectrum : *oracle;
        row.entries = entries_of(main);
        if (options.oracle_check && oracle && !spectrum->same_certificates(*oracle)) {
            row.problems.push_back("full_spectrum (" + std::to_string(spectrum->size()) +
                                   " certificates) disagrees with brute_force (" + std::to_string(oracle->size()) + ")");
        }
        if (options.families && oracle) check_families(g, *oracle, row);
        check_leaf_rule(g, main, row);
    } catch (const std::exception& e) {
        row.problems.push_back(std::string("error: ") + e.what());
    }
    row.micros = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
    return row;
}

std::string CensusRow::csv_header(bool timing) {
    return std::string("index,graph6,families,certificates,problems") + (timing ? ",micros" : "");
}

std::string CensusRow::to_csv(bool timing) const {
    // Fields never contain commas except families, which is quoted.
    std::ostringstream out;
    out << index << ',' << graph6 << ",\"" << family.to_string() << "\",";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const CensusEntry& e = entries[i];
        out << (i ? ";" : "") << e.lambda << ':' << (e.valence == Valence::Bivalent ? 'b' : 't') << ':' << e.count;
    }
    out << ',' << problems.size();
    if (timing) out << ',' << micros;
    return out.str();
}

std::string CensusRow::to_jsonl(bool timing) const {
    nlohmann::ordered_json j;
    j["index"] = index;
    j["graph"] = graph6;
    auto kinds = nlohmann::ordered_json::array();
    for (FamilyKind k : family.kinds()) kinds.push_back(to_string(k));
    j["families"] = kinds;
    auto certs = nlohmann::ordered_json::array();
    for (const CensusEntry& e : entries) {
        nlohmann::ordered_json c;
        c["lambda"] = e.lambda;
        c["valence"] = to_string(e.valence);
        c["count"] = e.count;
        c["valuation"] = e.example;
        certs.push_back(c);
    }
    j["certificates"] = certs;
    j["oracle_checked"] = oracle_checked;
    j["problems"] = problems;
    if (timing) j["micros"] = micros;
    return j.dump();
}

CensusSummary run_census(const GraphSource& source, const CensusOptions& options,
                         const std::function<bool(const CensusRow&)>& sink) {
    struct Stop {};
    CensusSummary summary;
    std::vector<Graph> batch;
    std::size_t next_index = 0;
    const unsigned jobs = std::max(1U, options.jobs);

    const auto flush = [&] {
        std::vector<std::optional<CensusRow>> rows(batch.size());
        std::atomic<std::size_t> cursor{0};
        const auto work = [&] {
            for (std::size_t i = cursor++; i < batch.size(); i = cursor++) rows[i] = census_row(batch[i], options);
        };
        if (jobs == 1 || batch.size() < 2) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
            work();
        }
        // Emit in input order.
        for (auto& row : rows) {
            if (!row) continue;
            row->index = next_index++;
            ++summary.graphs;
            const bool bad = !row->problems.empty();
            if (bad) ++summary.problems;
            if (!sink(*row) || (bad && options.stop_on_problem)) {
                summary.stopped = true;
                throw Stop{};
            }
        }
        batch.clear();
    };

    GraphFeed feed;
    feed.visit = [&](const Graph& g) {
        batch.push_back(g);
        if (batch.size() >= std::max<std::size_t>(1, options.batch)) flush();
    };
    feed.skip = [&](const std::string& why) {
        ++summary.skipped;
        if (options.log_skip) options.log_skip(why);
    };
    try {
        source(feed);
        flush();
    } catch (const Stop&) {
    }
    return summary;
}

GraphSource graph6_source(std::istream& in) {
    return [&in](const GraphFeed& feed) {
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            try {
                feed.visit(parse_graph6(line));
            } catch (const ParseError& e) {
                feed.skip("line " + std::to_string(number) + ", byte " + std::to_string(e.position()) + ": " +
                          e.what());
            }
        }
    };
}

GraphSource enumerator_source(std::string_view spec) {
    std::vector<std::string> parts;
    std::string part;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(part);
            part.clear();
        } else {
            part += ch;
        }
    }
    parts.push_back(part);

    std::vector<std::uint64_t> nums;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::uint64_t x = 0;
        const auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), x);
        if (ec != std::errc() || ptr != parts[i].data() + parts[i].size()) {
            throw ParseError("enumerator spec: '" + parts[i] + "' is not a number", i);
        }
        nums.push_back(x);
    }
    const std::string& kind = parts[0];
    const auto order_limit = [&](std::uint64_t bound) {
        if (nums.size() != 1) throw ParseError("enumerator spec: expected " + kind + ":N", 0);
        if (nums[0] > bound) throw ParseError("enumerator spec: N above " + std::to_string(bound), 1);
        return static_cast<std::size_t>(nums[0]);
    };
    if (kind == "connected") {
        const std::size_t max_n = order_limit(11);
        return [max_n](const GraphFeed& feed) {
            for (std::size_t n = 1; n <= max_n; ++n) for_each_connected_graph(n, feed.visit);
        };
    }
    if (kind == "trees") {
        const std::size_t max_n = order_limit(16);
        return [max_n](const GraphFeed& feed) {
            for (std::size_t n = 1; n <= max_n; ++n) for_each_tree(n, feed.visit);
        };
    }
    if (kind == "families") {
        const std::size_t max_n = order_limit(11);
        return [max_n](const GraphFeed& feed) {
            for (std::size_t n = 1; n <= max_n; ++n) for_each_family_member(n, feed.visit);
        };
    }
    if (kind == "random-trees") {
        if (nums.size() != 3) throw ParseError("enumerator spec: expected random-trees:N:COUNT:SEED", 0);
        const auto n = static_cast<std::size_t>(nums[0]);
        const std::uint64_t count = nums[1];
        const std::uint64_t seed = nums[2];
        return [n, count, seed](const GraphFeed& feed) {
            for (std::uint64_t i = 0; i < count; ++i) feed.visit(random_tree(n, seed + i));
        };
    }
    throw ParseError("enumerator spec: unknown kind '" + kind + "'", 0);
}

} // namespace ternvec
