#include "latred/random.hpp"

#include <string>
#include <utility>

namespace latred {

namespace {

// splitmix64; fixed implementation so seeds mean the same thing everywhere,
// unlike the unspecified standard-library distributions.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Value draw(SplitMix64& rng, const LatticeSpec& lattice, unsigned grid) {
    if (lattice.kind() == LatticeKind::boolean) {
        return (rng.next() & 1) ? 1.0 : 0.0;
    }
    const std::uint64_t steps = grid == 0 ? 1 : grid;
    return static_cast<Value>(rng.next() % (steps + 1)) / static_cast<Value>(steps);
}

std::vector<std::string> default_alphabet(std::size_t symbols) {
    std::vector<std::string> out;
    out.reserve(symbols);
    for (std::size_t i = 0; i < symbols; ++i) {
        std::string name(1, static_cast<char>('a' + i % 26));
        if (i >= 26) name += std::to_string(i / 26);
        out.push_back(std::move(name));
    }
    return out;
}

}  // namespace

FuzzyAutomaton random_automaton(std::uint64_t seed, const RandomAutomatonOptions& options) {
    if (options.states == 0 || options.symbols == 0) {
        throw ValidationError("random automaton needs at least one state and one symbol");
    }
    SplitMix64 rng{seed};
    const std::size_t n = options.states;
    std::vector<Value> sigma(n), tau(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = draw(rng, options.lattice, options.grid);
    for (std::size_t i = 0; i < n; ++i) tau[i] = draw(rng, options.lattice, options.grid);
    std::vector<FuzzyMatrix> delta;
    delta.reserve(options.symbols);
    for (std::size_t x = 0; x < options.symbols; ++x) {
        std::vector<Value> entries(n * n);
        for (Value& v : entries) v = draw(rng, options.lattice, options.grid);
        delta.emplace_back(options.lattice, n, n, std::move(entries));
    }
    return FuzzyAutomaton(default_alphabet(options.symbols),
                          FuzzyVector(options.lattice, std::move(sigma)), std::move(delta),
                          FuzzyVector(options.lattice, std::move(tau)));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng{seed ^ (0x632be59bd9b4e019ULL * (index + 1))};
    return rng.next();
}

}  // namespace latred
