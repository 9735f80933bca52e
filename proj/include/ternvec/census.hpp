#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternvec/graph.hpp"
#include "ternvec/structure.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

/// Certificates of one (lambda, valence) class, with one example valuation.
struct CensusEntry {
    int lambda = 0;
    Valence valence = Valence::Bivalent;
    std::uint64_t count = 0;
    std::string example;   // compact valuation, e.g. "+0-"
};

struct CensusRow {
    std::size_t index = 0;   // position in the input
    std::string graph6;
    Family family;
    std::vector<CensusEntry> entries;
    bool oracle_checked = false;
    std::vector<std::string> problems;   // violated checks; empty when all hold
    std::uint64_t micros = 0;

    static std::string csv_header(bool timing);
    std::string to_csv(bool timing) const;
    std::string to_jsonl(bool timing) const;
};

struct CensusOptions {
    unsigned jobs = 1;
    std::size_t batch = 2048;
    /// Compare full_spectrum with brute_force on every graph.
    bool oracle_check = false;
    /// Keep only trees, unicyclic, bicyclic and cactus graphs, and check on each:
    /// every certificate has lambda in {1,2,3,4}, the recognizer (enumerating
    /// all certificates) agrees with brute_force, every recognizer finding
    /// names a clause whose hypotheses hold, and every equal-link-free
    /// certificate on a graph with a leaf lives on P2 or a soft-centred star.
    /// Entries then come from brute_force unless oracle_check also asks for
    /// full_spectrum.
    bool families = false;
    /// Stop at the first row with problems.
    bool stop_on_problem = false;
    /// Largest order handed to brute_force.
    std::size_t oracle_max_order = 16;
    /// Receives the reason for every skipped input.
    std::function<void(const std::string&)> log_skip;
};

/// Everything the census computes for one graph. nullopt when `families` is
/// set and the graph is in none of the families.
std::optional<CensusRow> census_row(const Graph& g, const CensusOptions& options);

struct CensusSummary {
    std::size_t graphs = 0;     // rows produced
    std::size_t skipped = 0;    // malformed inputs
    std::size_t problems = 0;   // rows with problems
    bool stopped = false;       // ended early by stop_on_problem or the sink
};

/// Calls `visit` once per input graph; `skip` reports an input that could not
/// be parsed.
struct GraphFeed {
    std::function<void(const Graph&)> visit;
    std::function<void(const std::string& why)> skip;
};
using GraphSource = std::function<void(const GraphFeed&)>;

/// Runs census_row over the source with options.jobs workers, handing rows to
/// `sink` in input order. The sink may return false to stop.
CensusSummary run_census(const GraphSource& source, const CensusOptions& options,
                         const std::function<bool(const CensusRow&)>& sink);

/// graph6 lines from a stream. Blank lines are ignored; a malformed line is
/// reported through skip() with its line number and byte offset.
GraphSource graph6_source(std::istream& in);

/// Internal enumerators:
///   connected:N           all connected labeled graphs, n = 1..N (N <= 11)
///   trees:N               all labeled trees (Prüfer), n = 1..N
///   families:N            all connected labeled family members, n = 1..N
///   random-trees:N:C:S    C uniformly random trees on N vertices, seed S
/// Throws ParseError on an unknown spec.
GraphSource enumerator_source(std::string_view spec);

} // namespace ternvec
