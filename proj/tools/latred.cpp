#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latred/bench.hpp"
#include "latred/io.hpp"

namespace {

std::size_t word_cap_from_env() {
    const char* env = std::getenv("LATRED_WORD_CAP");
    if (env == nullptr || *env == '\0') return latred::kDefaultWordCap;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || cap == 0) {
        throw latred::ValidationError("LATRED_WORD_CAP must be a positive integer, got \"" +
                                      std::string(env) + "\"");
    }
    return static_cast<std::size_t>(cap);
}

std::string show(double v) {
    return nlohmann::json(v).dump();
}

struct ReduceArgs {
    std::string input;
    std::string method;
    unsigned k = 0;
    bool factorize = false;
    std::optional<unsigned> verify_to;
    std::string output;
    std::string report;
};

int run_reduce(const ReduceArgs& args) {
    const std::size_t cap = word_cap_from_env();
    latred::AutomatonDocument doc = latred::load_automaton(args.input);
    const latred::Method method = latred::method_from_string(args.method);
    latred::ReductionResult result =
        latred::reduce(doc.automaton, method, args.k, args.factorize, cap);

    latred::ReportDocument report{result.report, std::nullopt};
    if (args.verify_to) {
        latred::VerifyOutcome outcome;
        outcome.requested_k = *args.verify_to;
        auto cex = latred::k_equivalent(doc.automaton, result.automaton, *args.verify_to, cap);
        if (cex) {
            std::vector<std::string> names;
            for (latred::Symbol x : cex->word) names.push_back(doc.automaton.alphabet()[x]);
            outcome.witness = std::move(names);
            outcome.original_value = cex->left;
            outcome.reduced_value = cex->right;
            // The search is shortlex, so everything shorter than the witness agrees.
            report.report.equivalence_checked_to =
                static_cast<unsigned>(cex->word.size()) - 1;
            std::cerr << "note: behaviors differ on \"" << doc.automaton.format_word(cex->word)
                      << "\": " << show(cex->left) << " vs " << show(cex->right) << "\n";
        } else {
            report.report.equivalence_checked_to = std::max(args.k, *args.verify_to);
        }
        report.verify = std::move(outcome);
    }

    latred::AutomatonDocument reduced_doc{doc.name, result.automaton};
    if (!args.output.empty()) {
        latred::save_automaton(args.output, reduced_doc);
    } else {
        std::cout << latred::automaton_to_text(reduced_doc);
    }
    if (!args.report.empty()) {
        latred::save_report(args.report, report);
    }
    std::cerr << "reduced " << report.report.original_states << " -> "
              << report.report.reduced_states << " states (method=" << latred::to_string(method)
              << ", k=" << args.k << ", equivalent to length "
              << report.report.equivalence_checked_to << ")\n";
    return 0;
}

struct VerifyArgs {
    std::string first;
    std::string second;
    unsigned k = 0;
};

int run_verify(const VerifyArgs& args) {
    const std::size_t cap = word_cap_from_env();
    latred::AutomatonDocument a = latred::load_automaton(args.first);
    latred::AutomatonDocument b = latred::load_automaton(args.second);
    auto cex = latred::k_equivalent(a.automaton, b.automaton, args.k, cap);
    if (!cex) {
        std::cout << "equivalent on all words up to length " << args.k << "\n";
        return 0;
    }
    std::cout << "behaviors differ on \"" << a.automaton.format_word(cex->word) << "\" (length "
              << cex->word.size() << "): " << show(cex->left) << " vs " << show(cex->right)
              << "\n";
    return 5;
}

struct BenchArgs {
    std::vector<std::size_t> sizes = {10, 20, 40};
    std::size_t letters = 2;
    unsigned k = 3;
    std::string method = "ri";
    std::string lattice = "godel";
    std::uint64_t seed = 1;
    unsigned grid = 4;
};

int run_bench_cmd(const BenchArgs& args) {
    latred::BenchOptions options;
    options.sizes = args.sizes;
    options.symbols = args.letters;
    options.k = args.k;
    options.method = latred::method_from_string(args.method);
    options.lattice = latred::LatticeSpec(latred::lattice_kind_from_string(args.lattice));
    options.seed = args.seed;
    options.grid = args.grid;
    options.word_cap = word_cap_from_env();
    latred::write_bench_csv(std::cout, latred::run_bench(options));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State reduction for fuzzy finite automata over residuated lattices"};
    app.require_subcommand(1);

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "Reduce an automaton while preserving behavior on words up to length k");
    reduce->add_option("input", reduce_args.input, "Automaton JSON file")->required();
    reduce->add_option("--method", reduce_args.method, "ri, li, wri, or wli")->required();
    reduce->add_option("--k", reduce_args.k, "Equivalence level")->required();
    reduce->add_flag("--factorize", reduce_args.factorize,
                     "Reduce through a factorization of the quasi-order");
    unsigned verify_to = 0;
    CLI::Option* verify_opt = reduce->add_option(
        "--verify-to", verify_to, "Additionally compare behaviors on words up to this length");
    reduce->add_option("--output", reduce_args.output,
                       "Write the reduced automaton here instead of stdout");
    reduce->add_option("--report", reduce_args.report, "Write a JSON reduction report here");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Compare the behaviors of two automata on all words up to length k");
    verify->add_option("first", verify_args.first, "Automaton JSON file")->required();
    verify->add_option("second", verify_args.second, "Automaton JSON file")->required();
    verify->add_option("--k", verify_args.k, "Maximum word length")->required();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time the reduction methods on seeded random automata and print CSV");
    bench->add_option("--sizes", bench_args.sizes, "State counts, e.g. 10,20,40")->delimiter(',');
    bench->add_option("--letters", bench_args.letters, "Alphabet size");
    bench->add_option("--k", bench_args.k, "Equivalence level");
    bench->add_option("--method", bench_args.method, "ri, li, wri, or wli");
    bench->add_option("--lattice", bench_args.lattice,
                      "boolean, godel, lukasiewicz, or product");
    bench->add_option("--seed", bench_args.seed, "Base seed");
    bench->add_option("--grid", bench_args.grid, "Degrees are multiples of 1/grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (reduce->parsed()) {
            if (verify_opt->count() > 0) reduce_args.verify_to = verify_to;
            return run_reduce(reduce_args);
        }
        if (verify->parsed()) return run_verify(verify_args);
        if (bench->parsed()) return run_bench_cmd(bench_args);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const latred::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const latred::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const latred::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const latred::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
