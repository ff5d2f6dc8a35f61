#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latred/automaton.hpp"

namespace latred {

/// The four reduction methods:
///   ri   right invariant: iterated from tau / tau
///   li   left invariant: iterated from sigma \ sigma
///   wri  weakly right invariant: infimum of tau_u / tau_u over |u| <= k
///   wli  weakly left invariant: infimum of sigma_u \ sigma_u over |u| <= k
enum class Method {
    ri,
    li,
    wri,
    wli,
};

const char* to_string(Method method);

/// Accepts "ri", "li", "wri", "wli"; throws ParseError otherwise.
Method method_from_string(const std::string& name);

/// A descending sequence of quasi-orders M_0 >= M_1 >= ... >= M_k.
struct SequenceResult {
    /// Exactly k+1 members. Once the sequence stabilizes the remaining
    /// members repeat the stable matrix instead of being recomputed.
    std::vector<QuasiOrderMatrix> members;

    /// Least s with M_s == M_{s+1}, when one was observed. Detecting s == k
    /// costs one extra candidate computation beyond the requested members.
    std::optional<unsigned> stabilized_at;
};

/// Right invariant sequence: Q_0 = tau / tau,
/// Q_{t+1} = Q_t meet meet_x (delta(x) * Q_t) / delta(x).
SequenceResult ri_sequence(const FuzzyAutomaton& a, unsigned k);

/// Left invariant sequence: P_0 = sigma \ sigma,
/// P_{t+1} = P_t meet meet_x delta(x) \ (P_t * delta(x)).
SequenceResult li_sequence(const FuzzyAutomaton& a, unsigned k);

/// Weak right invariant: infimum of tau_u / tau_u over all words |u| <= k.
QuasiOrderMatrix wri_matrix(const FuzzyAutomaton& a, unsigned k,
                            std::size_t word_cap = kDefaultWordCap);

/// Weak left invariant: infimum of sigma_u \ sigma_u over all words |u| <= k.
QuasiOrderMatrix wli_matrix(const FuzzyAutomaton& a, unsigned k,
                            std::size_t word_cap = kDefaultWordCap);

struct ReductionReport {
    Method method;
    unsigned k;
    std::size_t original_states;
    std::size_t reduced_states;
    /// Distinct-row counts: one entry per sequence member for ri/li, a
    /// single entry for wri/wli.
    std::vector<std::size_t> d_sequence;
    /// For ri/li: the stabilization step, when observed within the run.
    std::optional<unsigned> stabilized_at;
    /// The reduced automaton agrees with the original on all words up to
    /// this length (k, or longer when a later verification extends it).
    unsigned equivalence_checked_to;
    /// Number of factor states when factorization was requested.
    std::optional<std::size_t> factorized;
};

struct ReductionResult {
    FuzzyAutomaton automaton;
    ReductionReport report;
};

/// Runs one reduction method at level k, builds the reduced automaton from
/// the resulting quasi-order (optionally through its factorization), and
/// verifies k-equivalence of input and output before returning. A failed
/// verification throws InternalError: the construction guarantees it.
ReductionResult reduce(const FuzzyAutomaton& a, Method method, unsigned k, bool factorize = false,
                       std::size_t word_cap = kDefaultWordCap);

/// Iterates the ri or li sequence until it stabilizes, returning the stable
/// matrix (the greatest right/left invariant quasi-order), or nullopt when
/// it has not stabilized within max_steps successor computations. Real
/// carriers need not stabilize at all, hence the bound. Throws
/// ValidationError for wri/wli, which have no such fixpoint iteration.
std::optional<QuasiOrderMatrix> greatest_invariant(const FuzzyAutomaton& a, Method method,
                                                   unsigned max_steps);

}  // namespace latred
