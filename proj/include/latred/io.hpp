#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latred/automaton.hpp"
#include "latred/reduction.hpp"

namespace latred {

/// An automaton plus its optional display name, as stored on disk.
///
/// The JSON layout:
///   {
///     "name": "example",              // optional
///     "lattice": "godel",             // boolean | godel | lukasiewicz | product
///     "epsilon": 1e-9,                // optional, defaults per lattice kind
///     "alphabet": ["x", "y"],
///     "states": 3,
///     "sigma": [1, 0.5, 0],
///     "tau": [0, 0, 1],
///     "delta": { "x": [[...], [...], [...]], "y": [[...], [...], [...]] }
///   }
struct AutomatonDocument {
    std::string name;
    FuzzyAutomaton automaton;
};

/// Parses the JSON text of an automaton document. Malformed JSON, missing
/// or mistyped fields throw ParseError; structurally sound documents whose
/// numbers violate the carrier or whose shapes disagree throw
/// ValidationError.
AutomatonDocument parse_automaton_text(const std::string& text);

/// Reads and parses a file; an unreadable path throws ParseError.
AutomatonDocument load_automaton(const std::string& path);

/// Pretty-printed JSON, field order as documented above, trailing newline.
/// Boolean-lattice degrees are written as 0/1 integers.
std::string automaton_to_text(const AutomatonDocument& doc);

void save_automaton(const std::string& path, const AutomatonDocument& doc);

/// Result of comparing original and reduced behavior up to a length.
struct VerifyOutcome {
    unsigned requested_k = 0;
    /// Symbol names of the first differing word; nullopt when equivalent.
    std::optional<std::vector<std::string>> witness;
    std::optional<double> original_value;
    std::optional<double> reduced_value;
};

struct ReportDocument {
    ReductionReport report;
    std::optional<VerifyOutcome> verify;
};

std::string report_to_text(const ReportDocument& doc);
ReportDocument parse_report_text(const std::string& text);
void save_report(const std::string& path, const ReportDocument& doc);
ReportDocument load_report(const std::string& path);

}  // namespace latred
