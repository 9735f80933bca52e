#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ternvec/structure.hpp"
#include "ternvec/ternary_dp.hpp"
#include "ternvec/transform.hpp"
#include "ternvec/valuation.hpp"

namespace ternvec {

/// One clause of the family characterisations. Each names the building block
/// that remains after deleting equal links, together with its eigenvalue.
enum class Clause : std::uint8_t {
    TreeP2Chains,
    TreeSoftStars,
    UnicyclicP2Chains,
    UnicyclicEvenCycle,
    UnicyclicSoftStars,
    UnicyclicCycle4k,
    UnicyclicCycle3k,
    BicyclicP2Chains,
    BicyclicEvenCycleLink,
    BicyclicTwoEvenCycles,
    BicyclicSoftStars,
    BicyclicB1Lambda2,
    BicyclicB1Lambda3,
    BicyclicB3Lambda3,
    BicyclicB3Lambda4,
    BicyclicCycle4kLinked,
    BicyclicCycle3kLinked,
    CactusP2Chains,
    CactusEvenCycles,
    CactusSoftStars,
    CactusCycles4k,
    CactusCycles3k,
    Unmatched
};

std::string to_string(Clause clause);
FamilyKind family_of(Clause clause);

/// Re-evaluates the clause's hypotheses (eigenvalue, valence, component
/// classes and their divisibility conditions) on a decomposed certificate.
bool clause_holds(Clause clause, const Certificate& c, const Decomposition& d);

/// First clause of `family` whose hypotheses hold, or Unmatched.
Clause match_clause(FamilyKind family, const Certificate& c, const Decomposition& d);

struct Finding {
    int lambda = 0;
    Certificate certificate;
    Clause clause = Clause::Unmatched;
    /// Canonical certificates with this eigenvalue (1 per finding when enumerating all).
    SolutionCount count = 1;
};

struct FamilyReport {
    FamilyKind family = FamilyKind::General;
    std::vector<Finding> found;
    /// True when the characterisation guarantees no eigenvalue was missed.
    bool exhaustive = false;

    std::vector<int> lambdas() const;
    /// (lambda, valuation) pairs of every finding, sorted.
    std::vector<std::pair<int, Valuation>> pairs() const;
};

struct RecognizeOptions {
    /// Report every certificate instead of one canonical representative per eigenvalue.
    bool enumerate_all = false;
};

/// Eigenvalues 1 (soft stars) and 2 (P2 chains). Throws ContractViolation unless a tree.
FamilyReport recognize_tree(const Graph& g, RecognizeOptions options = {});

/// Eigenvalues 1..4, by a DP anchored on the unique cycle. Throws unless m = n, connected.
FamilyReport recognize_unicyclic(const Graph& g, RecognizeOptions options = {});

/// Eigenvalues 1..4. Leafless inputs get the closed-form patterns of the B1/B3
/// clauses; everything else (equal links, leaves) comes from the DP with the
/// endpoints of one cut edge pinned. Throws unless m = n + 1, connected.
FamilyReport recognize_bicyclic(const Graph& g, RecognizeOptions options = {});

/// Eigenvalues 1..4 by a DP over the block-cut tree. Throws unless a cactus.
FamilyReport recognize_cactus(const Graph& g, RecognizeOptions options = {});

/// Dispatches to the first matching recognizer (tree, unicyclic, bicyclic,
/// cactus). Throws Rejected when the graph is in none of the families.
FamilyReport recognize(const Graph& g, RecognizeOptions options = {});

/// Every equal-link-free certificate of a leafless bicyclic graph, built from
/// the closed-form conditions: B1(p,q) with p,q = 0 mod 4 or p,q = 2 mod 4
/// (eigenvalue 2), B1(p,q) with p,q = 0 mod 3 (eigenvalue 3), B3 with every
/// chain a multiple of 3 (eigenvalue 3), and B3 with two 3-vertex chains and
/// one even chain, the diamond among them (eigenvalue 4). B2 graphs have none.
/// Throws ContractViolation unless leafless bicyclic.
std::vector<Certificate> bicyclic_pattern_certificates(const Graph& g);

} // namespace ternvec
