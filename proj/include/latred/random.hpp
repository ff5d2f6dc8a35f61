#pragma once

#include <cstdint>

#include "latred/automaton.hpp"

namespace latred {

struct RandomAutomatonOptions {
    std::size_t states = 4;
    std::size_t symbols = 2;
    LatticeSpec lattice = LatticeSpec(LatticeKind::godel);
    /// Degrees are drawn uniformly from {0, 1/grid, 2/grid, ..., 1}; the
    /// boolean lattice always draws from {0, 1}.
    unsigned grid = 4;
};

/// Deterministic: the same seed and options produce the same automaton on
/// every platform. Symbols are named "a", "b", ...
FuzzyAutomaton random_automaton(std::uint64_t seed, const RandomAutomatonOptions& options);

/// Derives a child seed from a base seed and an index, for seeding families
/// of related cases.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace latred
