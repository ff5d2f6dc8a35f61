#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latred/fuzmat.hpp"

namespace latred {

/// Index into an automaton's alphabet.
using Symbol = std::size_t;
using Word = std::vector<Symbol>;

/// Default ceiling on the number of words (or paths) an enumeration may
/// visit before giving up with CapExceededError.
inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// Fuzzy finite automaton: an initial row vector sigma, one transition
/// matrix per alphabet symbol, and a final column vector tau, all over one
/// lattice. States are 0..n-1.
class FuzzyAutomaton {
public:
    /// Validates: non-empty alphabet of distinct non-empty symbol names,
    /// sigma/tau of equal size n, one n x n matrix per symbol, and a single
    /// lattice across all components.
    FuzzyAutomaton(std::vector<std::string> alphabet, FuzzyVector sigma,
                   std::vector<FuzzyMatrix> delta, FuzzyVector tau);

    std::size_t num_states() const { return sigma_.size(); }
    std::size_t num_symbols() const { return alphabet_.size(); }
    const LatticeSpec& spec() const { return sigma_.spec(); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const FuzzyVector& sigma() const { return sigma_; }
    const FuzzyVector& tau() const { return tau_; }

    /// Throws UnknownSymbolError for an out-of-range symbol.
    const FuzzyMatrix& delta(Symbol x) const;

    std::optional<Symbol> symbol_index(const std::string& name) const;

    /// Human-readable rendering of a word; "(empty)" for the empty word.
    /// Single-character symbols concatenate, longer ones join with spaces.
    std::string format_word(const Word& word) const;

private:
    std::vector<std::string> alphabet_;
    FuzzyVector sigma_;
    FuzzyVector tau_;
    std::vector<FuzzyMatrix> delta_;
};

/// Degree to which the automaton accepts the word:
/// sigma * delta(x1) * ... * delta(xs) * tau.
Value behavior(const FuzzyAutomaton& a, const Word& word);

/// The same degree computed as the join over all state paths of the product
/// of degrees along each path. Exponential in the word length: refuses with
/// CapExceededError when n^(|word|+1) paths exceed the cap.
Value behavior_paths(const FuzzyAutomaton& a, const Word& word,
                     std::size_t path_cap = kDefaultWordCap);

struct Counterexample {
    Word word;
    Value left;   ///< behavior of the first automaton
    Value right;  ///< behavior of the second automaton
};

/// Compares behaviors on every word of length at most k, in shortlex order,
/// using the coarser of the two tolerances. Returns the first word where
/// they differ, or nullopt when the automata are k-equivalent. The automata
/// must share the alphabet and the lattice kind (state counts may differ).
/// Refuses with CapExceededError when the word count exceeds the cap.
std::optional<Counterexample> k_equivalent(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                           unsigned k, std::size_t word_cap = kDefaultWordCap);

/// Automaton induced by a quasi-order Q on the states of `a` (whose order
/// must be num_states): sigma * Q_c, Q_r * delta(x) * Q_c, Q_r * tau, with
/// Q_c, Q_r the distinct columns/rows of Q. Has d(Q) states.
FuzzyAutomaton row_automaton(const FuzzyAutomaton& a, const QuasiOrderMatrix& q);

/// Automaton induced by an explicit factorization left * right of a
/// quasi-order on the states of `a`: sigma * left, right * delta(x) * left,
/// right * tau. Validates that left * right is a quasi-order.
FuzzyAutomaton factor_automaton(const FuzzyAutomaton& a, const FuzzyMatrix& left,
                                const FuzzyMatrix& right);

using VectorFamily = std::map<Word, FuzzyVector>;

/// Vectors tau_u = delta(x1) * ... * delta(xs) * tau for all words u with
/// |u| <= k. With dedup, only the shortlex-first word of each distinct
/// vector is kept and duplicates are pruned before being extended (safe:
/// extensions of a duplicate duplicate extensions of the kept word).
VectorFamily tau_family(const FuzzyAutomaton& a, unsigned k, bool dedup = false,
                        std::size_t word_cap = kDefaultWordCap);

/// Vectors sigma_u = sigma * delta(x1) * ... * delta(xs), same conventions.
VectorFamily sigma_family(const FuzzyAutomaton& a, unsigned k, bool dedup = false,
                          std::size_t word_cap = kDefaultWordCap);

/// Number of words of length at most k over an alphabet of the given size,
/// saturating instead of overflowing.
std::size_t words_up_to(std::size_t symbols, unsigned k);

}  // namespace latred
