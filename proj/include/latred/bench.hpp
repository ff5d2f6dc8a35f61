#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "latred/random.hpp"
#include "latred/reduction.hpp"

namespace latred {

struct BenchOptions {
    /// One measurement row per state count.
    std::vector<std::size_t> sizes = {10, 20, 40};
    std::size_t symbols = 2;
    unsigned k = 3;
    Method method = Method::ri;
    LatticeSpec lattice = LatticeSpec(LatticeKind::godel);
    std::uint64_t seed = 1;
    unsigned grid = 4;
    std::size_t word_cap = kDefaultWordCap;
};

struct BenchRow {
    std::size_t n;
    std::size_t m;
    unsigned k;
    Method method;
    double millis;
    std::size_t d_final;
};

/// Times `reduce` on seeded random automata, one row per size. Repetitions
/// adapt so each measurement runs long enough to be stable; the reported
/// time is the best of three rounds. Everything except `millis` is
/// deterministic for fixed options.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// CSV with header n,m,k,method,millis,d_final.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace latred
