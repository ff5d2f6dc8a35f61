#include "latred/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

namespace latred {

namespace {

using Clock = std::chrono::steady_clock;

double run_once_millis(const FuzzyAutomaton& a, const BenchOptions& o) {
    const auto start = Clock::now();
    ReductionResult r = reduce(a, o.method, o.k, /*factorize=*/false, o.word_cap);
    const auto stop = Clock::now();
    // Keep the result alive past the timestamps.
    volatile std::size_t sink = r.report.reduced_states;
    (void)sink;
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& o) {
    constexpr double kTargetRoundMillis = 40.0;
    constexpr int kRounds = 3;
    constexpr std::size_t kMaxReps = 512;

    std::vector<BenchRow> rows;
    rows.reserve(o.sizes.size());
    for (std::size_t i = 0; i < o.sizes.size(); ++i) {
        const std::size_t n = o.sizes[i];
        RandomAutomatonOptions ropt;
        ropt.states = n;
        ropt.symbols = o.symbols;
        ropt.lattice = o.lattice;
        ropt.grid = o.grid;
        FuzzyAutomaton a = random_automaton(mix_seed(o.seed, i), ropt);

        ReductionResult warm = reduce(a, o.method, o.k, /*factorize=*/false, o.word_cap);
        const double probe = run_once_millis(a, o);
        const std::size_t reps = std::clamp<std::size_t>(
            static_cast<std::size_t>(kTargetRoundMillis / std::max(probe, 1e-4)), 1, kMaxReps);

        double best = probe;
        for (int round = 0; round < kRounds; ++round) {
            const auto start = Clock::now();
            for (std::size_t rep = 0; rep < reps; ++rep) run_once_millis(a, o);
            const auto stop = Clock::now();
            const double mean =
                std::chrono::duration<double, std::milli>(stop - start).count() /
                static_cast<double>(reps);
            best = std::min(best, mean);
        }
        rows.push_back(BenchRow{n, o.symbols, o.k, o.method, best,
                                warm.report.reduced_states});
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "n,m,k,method,millis,d_final\n";
    for (const BenchRow& row : rows) {
        char millis[64];
        std::snprintf(millis, sizeof millis, "%.6f", row.millis);
        out << row.n << ',' << row.m << ',' << row.k << ',' << to_string(row.method) << ','
            << millis << ',' << row.d_final << '\n';
    }
}

}  // namespace latred
