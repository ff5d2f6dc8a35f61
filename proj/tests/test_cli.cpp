#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "latred/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "latred_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out = work_dir() / ("out" + std::to_string(counter));
    const fs::path err = work_dir() / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd;
    if (!env.empty()) cmd += "env " + env + " ";
    cmd += std::string(LATRED_CLI_PATH) + " " + args;
    cmd += " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    result.out = slurp(out);
    result.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return result;
}

std::string fixture() {
    return std::string(LATRED_FIXTURE_DIR) + "/sixstate.json";
}

std::string write_doc(const std::string& name, const std::string& text) {
    const fs::path path = work_dir() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

}  // namespace

TEST_CASE("cli: reduce writes the automaton and the report") {
    const std::string out = (work_dir() / "reduced.json").string();
    const std::string report = (work_dir() / "report.json").string();
    CliResult r = run_cli("reduce " + fixture() + " --method ri --k 3 --output " + out +
                          " --report " + report);
    CHECK(r.code == 0);
    CHECK(r.err.find("6 -> 5") != std::string::npos);

    latred::AutomatonDocument doc = latred::load_automaton(out);
    CHECK(doc.automaton.num_states() == 5);
    CHECK(doc.automaton.alphabet() == std::vector<std::string>{"x", "y"});

    latred::ReportDocument rep = latred::load_report(report);
    CHECK(rep.report.method == latred::Method::ri);
    CHECK(rep.report.original_states == 6);
    CHECK(rep.report.reduced_states == 5);
    CHECK(rep.report.d_sequence == std::vector<std::size_t>{2, 3, 4, 5});
    CHECK(rep.report.stabilized_at == 3u);
    CHECK(!rep.verify.has_value());
    fs::remove(out);
    fs::remove(report);
}

TEST_CASE("cli: reduce prints to stdout by default") {
    CliResult r = run_cli("reduce " + fixture() + " --method wri --k 1");
    CHECK(r.code == 0);
    latred::AutomatonDocument doc = latred::parse_automaton_text(r.out);
    CHECK(doc.automaton.num_states() == 3);
}

TEST_CASE("cli: reduce with extended verification") {
    const std::string report = (work_dir() / "verify_report.json").string();
    CliResult r = run_cli("reduce " + fixture() +
                          " --method li --k 1 --verify-to 6 --report " + report +
                          " --output /dev/null");
    CHECK(r.code == 0);
    latred::ReportDocument rep = latred::load_report(report);
    REQUIRE(rep.verify.has_value());
    CHECK(rep.verify->requested_k == 6);
    // This fixture's behavior is constantly 1, so no witness can exist.
    CHECK(!rep.verify->witness.has_value());
    CHECK(rep.report.equivalence_checked_to == 6);
    fs::remove(report);
}

TEST_CASE("cli: verify equal and unequal pairs") {
    CliResult same = run_cli("verify " + fixture() + " " + fixture() + " --k 4");
    CHECK(same.code == 0);
    CHECK(same.out.find("equivalent") != std::string::npos);

    const std::string live = write_doc("live.json", R"({
      "lattice": "boolean", "alphabet": ["a"], "states": 1,
      "sigma": [1], "tau": [1], "delta": {"a": [[1]]}
    })");
    const std::string dead = write_doc("dead.json", R"({
      "lattice": "boolean", "alphabet": ["a"], "states": 1,
      "sigma": [1], "tau": [1], "delta": {"a": [[0]]}
    })");
    CliResult differ = run_cli("verify " + live + " " + dead + " --k 2");
    CHECK(differ.code == 5);
    CHECK(differ.out.find("differ") != std::string::npos);
    CHECK(differ.out.find("\"a\"") != std::string::npos);
}

TEST_CASE("cli: bench prints the expected csv") {
    CliResult r = run_cli("bench --sizes 4,6 --k 2 --method ri --seed 3");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,m,k,method,millis,d_final");
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.find(",2,2,ri,") != std::string::npos);
    }
    CHECK(rows == 2);
}

TEST_CASE("cli: exit codes") {
    SUBCASE("missing and malformed input: 1") {
        CHECK(run_cli("reduce /nonexistent.json --method ri --k 1").code == 1);
        const std::string bad = write_doc("bad.json", "{ not json");
        CHECK(run_cli("reduce " + bad + " --method ri --k 1").code == 1);
        CHECK(run_cli("reduce " + fixture() + " --method zz --k 1").code == 1);
    }

    SUBCASE("invalid content: 2") {
        const std::string short_sigma = write_doc("short_sigma.json", R"({
          "lattice": "boolean", "alphabet": ["a"], "states": 2,
          "sigma": [1], "tau": [1, 0], "delta": {"a": [[1, 0], [0, 1]]}
        })");
        CHECK(run_cli("reduce " + short_sigma + " --method ri --k 1").code == 2);
    }

    SUBCASE("word cap: 3") {
        CHECK(run_cli("reduce " + fixture() + " --method wri --k 30").code == 3);
        CHECK(run_cli("verify " + fixture() + " " + fixture() + " --k 3",
                      "LATRED_WORD_CAP=5")
                  .code == 3);
        CHECK(run_cli("verify " + fixture() + " " + fixture() + " --k 3",
                      "LATRED_WORD_CAP=abc")
                  .code == 2);
    }

    SUBCASE("usage errors: 1, help: 0") {
        CHECK(run_cli("").code == 1);
        CHECK(run_cli("reduce").code == 1);
        CHECK(run_cli("frobnicate --k 1").code == 1);
        CHECK(run_cli("--help").code == 0);
        CHECK(run_cli("reduce --help").code == 0);
    }
}
