#include "latred/reduction.hpp"

#include <set>
#include <utility>

namespace latred {

const char* to_string(Method method) {
    switch (method) {
        case Method::ri: return "ri";
        case Method::li: return "li";
        case Method::wri: return "wri";
        case Method::wli: return "wli";
    }
    throw InternalError("unhandled method");
}

Method method_from_string(const std::string& name) {
    if (name == "ri") return Method::ri;
    if (name == "li") return Method::li;
    if (name == "wri") return Method::wri;
    if (name == "wli") return Method::wli;
    throw ParseError("unknown method \"" + name + "\" (expected ri, li, wri, or wli)");
}

namespace {

QuasiOrderMatrix validate_member(FuzzyMatrix m, const char* what) {
    try {
        return validate_quasi_order(std::move(m));
    } catch (const ValidationError& e) {
        throw InternalError(std::string(what) + " failed quasi-order validation: " + e.what());
    }
}

FuzzyMatrix invariant_step(const FuzzyAutomaton& a, const FuzzyMatrix& cur, bool right) {
    FuzzyMatrix acc = cur;
    for (Symbol x = 0; x < a.num_symbols(); ++x) {
        const FuzzyMatrix& dx = a.delta(x);
        if (right) {
            acc = meet(acc, left_residual(mat_mul(dx, cur), dx));
        } else {
            acc = meet(acc, right_residual(dx, mat_mul(cur, dx)));
        }
    }
    return acc;
}

FuzzyMatrix invariant_start(const FuzzyAutomaton& a, bool right) {
    return right ? vec_left_residual(a.tau(), a.tau())
                 : vec_right_residual(a.sigma(), a.sigma());
}

SequenceResult invariant_sequence(const FuzzyAutomaton& a, unsigned k, bool right) {
    const char* what = right ? "right invariant sequence member" : "left invariant sequence member";
    SequenceResult out;
    out.members.reserve(k + 1);
    FuzzyMatrix cur = invariant_start(a, right);
    out.members.push_back(validate_member(cur, what));
    for (unsigned t = 0; t < k; ++t) {
        if (out.stabilized_at) {
            out.members.push_back(out.members.back());
            continue;
        }
        FuzzyMatrix next = invariant_step(a, cur, right);
        if (mat_eq(next, cur)) {
            out.stabilized_at = t;
            out.members.push_back(out.members.back());
        } else {
            out.members.push_back(validate_member(next, what));
            cur = std::move(next);
        }
    }
    if (!out.stabilized_at && mat_eq(invariant_step(a, cur, right), cur)) {
        out.stabilized_at = k;
    }
    return out;
}

QuasiOrderMatrix weak_invariant(const FuzzyAutomaton& a, unsigned k, std::size_t word_cap,
                                bool right) {
    VectorFamily family = right ? tau_family(a, k, /*dedup=*/false, word_cap)
                                : sigma_family(a, k, /*dedup=*/false, word_cap);
    // Words with bitwise-identical vectors contribute the same residual;
    // fold each distinct vector once.
    std::set<std::vector<Value>> seen;
    std::optional<FuzzyMatrix> acc;
    for (const auto& [word, vec] : family) {
        if (!seen.insert(vec.entries()).second) continue;
        FuzzyMatrix res = right ? vec_left_residual(vec, vec) : vec_right_residual(vec, vec);
        acc = acc ? meet(*acc, res) : std::move(res);
    }
    return validate_member(std::move(*acc),
                           right ? "weak right invariant" : "weak left invariant");
}

}  // namespace

SequenceResult ri_sequence(const FuzzyAutomaton& a, unsigned k) {
    return invariant_sequence(a, k, /*right=*/true);
}

SequenceResult li_sequence(const FuzzyAutomaton& a, unsigned k) {
    return invariant_sequence(a, k, /*right=*/false);
}

QuasiOrderMatrix wri_matrix(const FuzzyAutomaton& a, unsigned k, std::size_t word_cap) {
    return weak_invariant(a, k, word_cap, /*right=*/true);
}

QuasiOrderMatrix wli_matrix(const FuzzyAutomaton& a, unsigned k, std::size_t word_cap) {
    return weak_invariant(a, k, word_cap, /*right=*/false);
}

ReductionResult reduce(const FuzzyAutomaton& a, Method method, unsigned k, bool factorize,
                       std::size_t word_cap) {
    ReductionReport report;
    report.method = method;
    report.k = k;
    report.original_states = a.num_states();
    report.equivalence_checked_to = k;

    std::optional<QuasiOrderMatrix> q;
    switch (method) {
        case Method::ri:
        case Method::li: {
            SequenceResult seq =
                method == Method::ri ? ri_sequence(a, k) : li_sequence(a, k);
            for (const QuasiOrderMatrix& member : seq.members) {
                report.d_sequence.push_back(member.d());
            }
            report.stabilized_at = seq.stabilized_at;
            q = std::move(seq.members.back());
            break;
        }
        case Method::wri:
        case Method::wli: {
            q = method == Method::wri ? wri_matrix(a, k, word_cap) : wli_matrix(a, k, word_cap);
            report.d_sequence.push_back(q->d());
            break;
        }
    }

    FuzzyAutomaton reduced = row_automaton(a, *q);
    if (factorize) {
        Factorization f = r_factorize(*q);
        report.factorized = f.right.rows();
        reduced = factor_automaton(a, f.left, f.right);
    }
    report.reduced_states = reduced.num_states();

    if (auto cex = k_equivalent(a, reduced, k, word_cap)) {
        throw InternalError("reduced automaton disagrees on \"" + a.format_word(cex->word) +
                            "\": " + std::to_string(cex->left) + " vs " +
                            std::to_string(cex->right));
    }
    return ReductionResult{std::move(reduced), std::move(report)};
}

std::optional<QuasiOrderMatrix> greatest_invariant(const FuzzyAutomaton& a, Method method,
                                                   unsigned max_steps) {
    if (method != Method::ri && method != Method::li) {
        throw ValidationError("only the ri and li sequences have a fixpoint iteration");
    }
    const bool right = method == Method::ri;
    FuzzyMatrix cur = invariant_start(a, right);
    for (unsigned step = 0; step < max_steps; ++step) {
        FuzzyMatrix next = invariant_step(a, cur, right);
        if (mat_eq(next, cur)) {
            return validate_member(std::move(cur), "greatest invariant");
        }
        cur = std::move(next);
    }
    return std::nullopt;
}

}  // namespace latred
