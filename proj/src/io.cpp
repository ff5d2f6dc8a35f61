#include "latred/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace latred {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

double number_field(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError(where + " must be a number");
    }
    return j.get<double>();
}

std::vector<Value> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) {
        throw ParseError(where + " must be an array of numbers");
    }
    std::vector<Value> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number_field(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

FuzzyVector parse_vector(const json& j, const LatticeSpec& spec, std::size_t n,
                         const std::string& where) {
    std::vector<Value> entries = number_array(j, where);
    if (entries.size() != n) {
        throw ValidationError(where + " has " + std::to_string(entries.size()) +
                              " entries, expected " + std::to_string(n));
    }
    return FuzzyVector(spec, std::move(entries));
}

FuzzyMatrix parse_matrix(const json& j, const LatticeSpec& spec, std::size_t n,
                         const std::string& where) {
    if (!j.is_array()) {
        throw ParseError(where + " must be an array of rows");
    }
    if (j.size() != n) {
        throw ValidationError(where + " has " + std::to_string(j.size()) + " rows, expected " +
                              std::to_string(n));
    }
    std::vector<Value> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Value> row = number_array(j[i], where + "[" + std::to_string(i) + "]");
        if (row.size() != n) {
            throw ValidationError(where + "[" + std::to_string(i) + "] has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FuzzyMatrix(spec, n, n, std::move(entries));
}

ordered_json value_to_json(Value v, const LatticeSpec& spec) {
    if (spec.kind() == LatticeKind::boolean) {
        return static_cast<int>(v);
    }
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error("cannot write \"" + path + "\"");
    }
}

}  // namespace

AutomatonDocument parse_automaton_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("automaton document must be a JSON object");
    }
    if (!j.contains("lattice") || !j["lattice"].is_string()) {
        throw ParseError("\"lattice\" must be a string");
    }
    const LatticeKind kind = lattice_kind_from_string(j["lattice"].get<std::string>());
    LatticeSpec spec = j.contains("epsilon")
                           ? LatticeSpec(kind, number_field(j["epsilon"], "\"epsilon\""))
                           : LatticeSpec(kind);

    if (!j.contains("alphabet") || !j["alphabet"].is_array()) {
        throw ParseError("\"alphabet\" must be an array of strings");
    }
    std::vector<std::string> alphabet;
    for (const json& s : j["alphabet"]) {
        if (!s.is_string()) {
            throw ParseError("\"alphabet\" must contain only strings");
        }
        alphabet.push_back(s.get<std::string>());
    }

    if (!j.contains("states") || !j["states"].is_number_integer() ||
        j["states"].get<long long>() <= 0) {
        throw ParseError("\"states\" must be a positive integer");
    }
    const std::size_t n = j["states"].get<std::size_t>();

    if (!j.contains("sigma")) throw ParseError("\"sigma\" is missing");
    if (!j.contains("tau")) throw ParseError("\"tau\" is missing");
    FuzzyVector sigma = parse_vector(j["sigma"], spec, n, "\"sigma\"");
    FuzzyVector tau = parse_vector(j["tau"], spec, n, "\"tau\"");

    if (!j.contains("delta") || !j["delta"].is_object()) {
        throw ParseError("\"delta\" must be an object mapping symbols to matrices");
    }
    const json& delta_obj = j["delta"];
    for (const auto& [key, value] : delta_obj.items()) {
        bool known = false;
        for (const std::string& name : alphabet) {
            if (name == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError("\"delta\" has transitions for \"" + key +
                                  "\", which is not in the alphabet");
        }
    }
    std::vector<FuzzyMatrix> delta;
    for (const std::string& name : alphabet) {
        if (!delta_obj.contains(name)) {
            throw ValidationError("\"delta\" is missing transitions for \"" + name + "\"");
        }
        delta.push_back(parse_matrix(delta_obj[name], spec, n, "\"delta\".\"" + name + "\""));
    }

    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw ParseError("\"name\" must be a string");
        }
        name = j["name"].get<std::string>();
    }
    return AutomatonDocument{std::move(name), FuzzyAutomaton(std::move(alphabet), std::move(sigma),
                                                             std::move(delta), std::move(tau))};
}

AutomatonDocument load_automaton(const std::string& path) {
    return parse_automaton_text(read_file(path));
}

std::string automaton_to_text(const AutomatonDocument& doc) {
    const FuzzyAutomaton& a = doc.automaton;
    const LatticeSpec& spec = a.spec();
    ordered_json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["lattice"] = to_string(spec.kind());
    j["epsilon"] = spec.epsilon();
    j["alphabet"] = a.alphabet();
    j["states"] = a.num_states();
    ordered_json sigma = ordered_json::array();
    ordered_json tau = ordered_json::array();
    for (std::size_t i = 0; i < a.num_states(); ++i) {
        sigma.push_back(value_to_json(a.sigma()[i], spec));
        tau.push_back(value_to_json(a.tau()[i], spec));
    }
    j["sigma"] = std::move(sigma);
    j["tau"] = std::move(tau);
    ordered_json delta = ordered_json::object();
    for (Symbol x = 0; x < a.num_symbols(); ++x) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < a.num_states(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t jj = 0; jj < a.num_states(); ++jj) {
                row.push_back(value_to_json(a.delta(x)(i, jj), spec));
            }
            rows.push_back(std::move(row));
        }
        delta[a.alphabet()[x]] = std::move(rows);
    }
    j["delta"] = std::move(delta);
    return j.dump(2) + "\n";
}

void save_automaton(const std::string& path, const AutomatonDocument& doc) {
    write_file(path, automaton_to_text(doc));
}

std::string report_to_text(const ReportDocument& doc) {
    const ReductionReport& r = doc.report;
    ordered_json j;
    j["method"] = to_string(r.method);
    j["k"] = r.k;
    j["original_states"] = r.original_states;
    j["reduced_states"] = r.reduced_states;
    j["d_sequence"] = r.d_sequence;
    if (r.stabilized_at) {
        j["stabilized_at"] = *r.stabilized_at;
    } else {
        j["stabilized_at"] = nullptr;
    }
    j["equivalence_checked_to"] = r.equivalence_checked_to;
    if (r.factorized) {
        j["factorized"] = *r.factorized;
    } else {
        j["factorized"] = nullptr;
    }
    if (doc.verify) {
        ordered_json v;
        v["requested_k"] = doc.verify->requested_k;
        if (doc.verify->witness) {
            v["witness"] = *doc.verify->witness;
            v["original_value"] = doc.verify->original_value.value();
            v["reduced_value"] = doc.verify->reduced_value.value();
        } else {
            v["witness"] = nullptr;
            v["original_value"] = nullptr;
            v["reduced_value"] = nullptr;
        }
        j["verify"] = std::move(v);
    }
    return j.dump(2) + "\n";
}

ReportDocument parse_report_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("report document must be a JSON object");
    }
    auto require = [&j](const char* key) -> const json& {
        if (!j.contains(key)) {
            throw ParseError(std::string("report is missing \"") + key + "\"");
        }
        return j[key];
    };
    ReportDocument doc;
    ReductionReport& r = doc.report;
    if (!require("method").is_string()) throw ParseError("\"method\" must be a string");
    r.method = method_from_string(j["method"].get<std::string>());
    r.k = static_cast<unsigned>(number_field(require("k"), "\"k\""));
    r.original_states = static_cast<std::size_t>(
        number_field(require("original_states"), "\"original_states\""));
    r.reduced_states =
        static_cast<std::size_t>(number_field(require("reduced_states"), "\"reduced_states\""));
    const json& ds = require("d_sequence");
    if (!ds.is_array()) throw ParseError("\"d_sequence\" must be an array");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        r.d_sequence.push_back(static_cast<std::size_t>(
            number_field(ds[i], "\"d_sequence\"[" + std::to_string(i) + "]")));
    }
    if (j.contains("stabilized_at") && !j["stabilized_at"].is_null()) {
        r.stabilized_at =
            static_cast<unsigned>(number_field(j["stabilized_at"], "\"stabilized_at\""));
    }
    r.equivalence_checked_to = static_cast<unsigned>(
        number_field(require("equivalence_checked_to"), "\"equivalence_checked_to\""));
    if (j.contains("factorized") && !j["factorized"].is_null()) {
        r.factorized = static_cast<std::size_t>(number_field(j["factorized"], "\"factorized\""));
    }
    if (j.contains("verify") && !j["verify"].is_null()) {
        const json& v = j["verify"];
        if (!v.is_object()) throw ParseError("\"verify\" must be an object");
        VerifyOutcome out;
        if (!v.contains("requested_k")) throw ParseError("\"verify\" is missing \"requested_k\"");
        out.requested_k = static_cast<unsigned>(number_field(v["requested_k"], "\"requested_k\""));
        if (v.contains("witness") && !v["witness"].is_null()) {
            if (!v["witness"].is_array()) throw ParseError("\"witness\" must be an array");
            std::vector<std::string> witness;
            for (const json& s : v["witness"]) {
                if (!s.is_string()) throw ParseError("\"witness\" must contain only strings");
                witness.push_back(s.get<std::string>());
            }
            out.witness = std::move(witness);
            if (!v.contains("original_value") || !v.contains("reduced_value")) {
                throw ParseError("\"verify\" with a witness needs both behavior values");
            }
            out.original_value = number_field(v["original_value"], "\"original_value\"");
            out.reduced_value = number_field(v["reduced_value"], "\"reduced_value\"");
        }
        doc.verify = std::move(out);
    }
    return doc;
}

void save_report(const std::string& path, const ReportDocument& doc) {
    write_file(path, report_to_text(doc));
}

ReportDocument load_report(const std::string& path) {
    return parse_report_text(read_file(path));
}

}  // namespace latred
