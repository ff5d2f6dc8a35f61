#include "latred/automaton.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace latred {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kUnbounded / b) return kUnbounded;
    return a * b;
}

void check_word(const FuzzyAutomaton& a, const Word& word) {
    for (Symbol x : word) {
        if (x >= a.num_symbols()) {
            throw UnknownSymbolError("word contains symbol index " + std::to_string(x) +
                                     " but the alphabet has " + std::to_string(a.num_symbols()) +
                                     " symbols");
        }
    }
}

}  // namespace

FuzzyAutomaton::FuzzyAutomaton(std::vector<std::string> alphabet, FuzzyVector sigma,
                               std::vector<FuzzyMatrix> delta, FuzzyVector tau)
    : alphabet_(std::move(alphabet)),
      sigma_(std::move(sigma)),
      tau_(std::move(tau)),
      delta_(std::move(delta)) {
    if (alphabet_.empty()) {
        throw ValidationError("alphabet must not be empty");
    }
    std::set<std::string> names;
    for (const std::string& name : alphabet_) {
        if (name.empty()) {
            throw ValidationError("alphabet symbols must be non-empty strings");
        }
        if (!names.insert(name).second) {
            throw ValidationError("alphabet symbol \"" + name + "\" appears twice");
        }
    }
    if (sigma_.size() != tau_.size()) {
        throw DimensionMismatchError("initial and final vectors have sizes " +
                                     std::to_string(sigma_.size()) + " and " +
                                     std::to_string(tau_.size()));
    }
    if (delta_.size() != alphabet_.size()) {
        throw ValidationError("need one transition matrix per symbol: " +
                              std::to_string(alphabet_.size()) + " symbols, " +
                              std::to_string(delta_.size()) + " matrices");
    }
    const std::size_t n = sigma_.size();
    if (!(tau_.spec() == sigma_.spec())) {
        throw LatticeMismatchError("initial and final vectors use different lattices");
    }
    for (std::size_t x = 0; x < delta_.size(); ++x) {
        if (!(delta_[x].spec() == sigma_.spec())) {
            throw LatticeMismatchError("transition matrix for \"" + alphabet_[x] +
                                       "\" uses a different lattice");
        }
        if (delta_[x].rows() != n || delta_[x].cols() != n) {
            throw DimensionMismatchError("transition matrix for \"" + alphabet_[x] + "\" is " +
                                         std::to_string(delta_[x].rows()) + "x" +
                                         std::to_string(delta_[x].cols()) + ", expected " +
                                         std::to_string(n) + "x" + std::to_string(n));
        }
    }
}

const FuzzyMatrix& FuzzyAutomaton::delta(Symbol x) const {
    if (x >= delta_.size()) {
        throw UnknownSymbolError("symbol index " + std::to_string(x) + " out of range");
    }
    return delta_[x];
}

std::optional<Symbol> FuzzyAutomaton::symbol_index(const std::string& name) const {
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
        if (alphabet_[x] == name) return x;
    }
    return std::nullopt;
}

std::string FuzzyAutomaton::format_word(const Word& word) const {
    if (word.empty()) return "(empty)";
    bool single_chars = true;
    for (const std::string& name : alphabet_) {
        if (name.size() != 1) {
            single_chars = false;
            break;
        }
    }
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !single_chars) out += ' ';
        out += alphabet_[word[i]];
    }
    return out;
}

Value behavior(const FuzzyAutomaton& a, const Word& word) {
    check_word(a, word);
    FuzzyVector v = a.sigma();
    for (Symbol x : word) v = vec_mat_mul(v, a.delta(x));
    return dot(v, a.tau());
}

Value behavior_paths(const FuzzyAutomaton& a, const Word& word, std::size_t path_cap) {
    check_word(a, word);
    const std::size_t n = a.num_states();
    std::size_t paths = 1;
    for (std::size_t i = 0; i < word.size() + 1; ++i) paths = saturating_mul(paths, n);
    if (paths > path_cap) {
        throw CapExceededError("path enumeration needs " + std::to_string(paths) +
                               " paths, above the cap of " + std::to_string(path_cap));
    }
    const LatticeSpec& spec = a.spec();
    std::vector<std::size_t> at(word.size() + 1, 0);
    Value best = 0.0;
    while (true) {
        Value w = a.sigma()[at[0]];
        for (std::size_t s = 0; s < word.size(); ++s) {
            w = spec.tensor(w, a.delta(word[s])(at[s], at[s + 1]));
        }
        w = spec.tensor(w, a.tau()[at.back()]);
        best = spec.join(best, w);
        std::size_t pos = 0;
        while (pos < at.size() && ++at[pos] == n) {
            at[pos] = 0;
            ++pos;
        }
        if (pos == at.size()) break;
    }
    return best;
}

std::optional<Counterexample> k_equivalent(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                                           unsigned k, std::size_t word_cap) {
    if (a.alphabet() != b.alphabet()) {
        throw ValidationError("cannot compare automata over different alphabets");
    }
    if (a.spec().kind() != b.spec().kind()) {
        throw LatticeMismatchError("cannot compare automata over different lattice kinds");
    }
    const std::size_t m = a.num_symbols();
    const std::size_t total = words_up_to(m, k);
    if (total > word_cap) {
        throw CapExceededError("comparing all words up to length " + std::to_string(k) +
                               " needs " + std::to_string(total) + " words, above the cap of " +
                               std::to_string(word_cap));
    }
    const double tol = std::max(a.spec().epsilon(), b.spec().epsilon());
    auto differ = [tol](Value x, Value y) { return std::abs(x - y) > tol; };

    // Breadth-first over the word tree, sharing prefix state vectors. Words
    // are rebuilt from parent links only when a counterexample is found.
    struct Link {
        std::size_t parent;
        Symbol sym;
    };
    std::vector<std::vector<Link>> tree;
    auto rebuild = [&tree](std::size_t level, std::size_t index) {
        Word word(level);
        for (std::size_t l = level; l > 0; --l) {
            word[l - 1] = tree[l][index].sym;
            index = tree[l][index].parent;
        }
        return word;
    };

    std::vector<std::pair<FuzzyVector, FuzzyVector>> cur;
    cur.emplace_back(a.sigma(), b.sigma());
    tree.push_back({Link{0, 0}});
    {
        Value left = dot(cur[0].first, a.tau());
        Value right = dot(cur[0].second, b.tau());
        if (differ(left, right)) return Counterexample{Word{}, left, right};
    }
    for (unsigned len = 1; len <= k; ++len) {
        std::vector<std::pair<FuzzyVector, FuzzyVector>> next;
        std::vector<Link> links;
        next.reserve(cur.size() * m);
        links.reserve(cur.size() * m);
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
            for (Symbol x = 0; x < m; ++x) {
                FuzzyVector va = vec_mat_mul(cur[idx].first, a.delta(x));
                FuzzyVector vb = vec_mat_mul(cur[idx].second, b.delta(x));
                Value left = dot(va, a.tau());
                Value right = dot(vb, b.tau());
                links.push_back(Link{idx, x});
                if (differ(left, right)) {
                    const std::size_t found = links.size() - 1;
                    tree.push_back(std::move(links));
                    return Counterexample{rebuild(len, found), left, right};
                }
                next.emplace_back(std::move(va), std::move(vb));
            }
        }
        tree.push_back(std::move(links));
        cur = std::move(next);
    }
    return std::nullopt;
}

FuzzyAutomaton row_automaton(const FuzzyAutomaton& a, const QuasiOrderMatrix& q) {
    if (q.order() != a.num_states()) {
        throw DimensionMismatchError("quasi-order of order " + std::to_string(q.order()) +
                                     " does not match " + std::to_string(a.num_states()) +
                                     " states");
    }
    if (!(q.spec() == a.spec())) {
        throw LatticeMismatchError("quasi-order and automaton use different lattices");
    }
    RowColumnFactors f = extract_rows_cols(q);
    FuzzyVector sigma = vec_mat_mul(a.sigma(), f.cols);
    FuzzyVector tau = mat_vec_mul(f.rows, a.tau());
    std::vector<FuzzyMatrix> delta;
    delta.reserve(a.num_symbols());
    for (Symbol x = 0; x < a.num_symbols(); ++x) {
        delta.push_back(mat_mul(mat_mul(f.rows, a.delta(x)), f.cols));
    }
    return FuzzyAutomaton(a.alphabet(), std::move(sigma), std::move(delta), std::move(tau));
}

FuzzyAutomaton factor_automaton(const FuzzyAutomaton& a, const FuzzyMatrix& left,
                                const FuzzyMatrix& right) {
    const std::size_t n = a.num_states();
    if (left.rows() != n || right.cols() != n || left.cols() != right.rows()) {
        throw DimensionMismatchError("factor shapes " + std::to_string(left.rows()) + "x" +
                                     std::to_string(left.cols()) + " and " +
                                     std::to_string(right.rows()) + "x" +
                                     std::to_string(right.cols()) + " do not fit " +
                                     std::to_string(n) + " states");
    }
    validate_quasi_order(mat_mul(left, right));
    FuzzyVector sigma = vec_mat_mul(a.sigma(), left);
    FuzzyVector tau = mat_vec_mul(right, a.tau());
    std::vector<FuzzyMatrix> delta;
    delta.reserve(a.num_symbols());
    for (Symbol x = 0; x < a.num_symbols(); ++x) {
        delta.push_back(mat_mul(mat_mul(right, a.delta(x)), left));
    }
    return FuzzyAutomaton(a.alphabet(), std::move(sigma), std::move(delta), std::move(tau));
}

namespace {

VectorFamily vector_family(const FuzzyAutomaton& a, unsigned k, bool dedup, std::size_t cap,
                           bool prepend) {
    const std::size_t m = a.num_symbols();
    if (!dedup && words_up_to(m, k) > cap) {
        throw CapExceededError("word tree up to length " + std::to_string(k) + " over " +
                               std::to_string(m) + " symbols has " +
                               std::to_string(words_up_to(m, k)) + " nodes, above the cap of " +
                               std::to_string(cap));
    }
    VectorFamily out;
    std::set<std::vector<Value>> seen;
    std::size_t count = 0;
    std::vector<std::pair<Word, FuzzyVector>> cur;

    auto consider = [&](std::vector<std::pair<Word, FuzzyVector>>& dst, Word word,
                        FuzzyVector vec) {
        if (dedup && !seen.insert(vec.entries()).second) return;
        if (++count > cap) {
            throw CapExceededError("word tree exceeds the cap of " + std::to_string(cap) +
                                   " nodes");
        }
        out.emplace(word, vec);
        dst.emplace_back(std::move(word), std::move(vec));
    };

    consider(cur, Word{}, prepend ? a.tau() : a.sigma());
    for (unsigned len = 1; len <= k && !cur.empty(); ++len) {
        std::vector<std::pair<Word, FuzzyVector>> next;
        if (prepend) {
            // Symbol-major order keeps the generated level in shortlex order,
            // since the new symbol lands at the front of the word.
            for (Symbol x = 0; x < m; ++x) {
                for (const auto& [word, vec] : cur) {
                    Word grown;
                    grown.reserve(word.size() + 1);
                    grown.push_back(x);
                    grown.insert(grown.end(), word.begin(), word.end());
                    consider(next, std::move(grown), mat_vec_mul(a.delta(x), vec));
                }
            }
        } else {
            for (const auto& [word, vec] : cur) {
                for (Symbol x = 0; x < m; ++x) {
                    Word grown = word;
                    grown.push_back(x);
                    consider(next, std::move(grown), vec_mat_mul(vec, a.delta(x)));
                }
            }
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace

VectorFamily tau_family(const FuzzyAutomaton& a, unsigned k, bool dedup, std::size_t word_cap) {
    return vector_family(a, k, dedup, word_cap, /*prepend=*/true);
}

VectorFamily sigma_family(const FuzzyAutomaton& a, unsigned k, bool dedup, std::size_t word_cap) {
    return vector_family(a, k, dedup, word_cap, /*prepend=*/false);
}

std::size_t words_up_to(std::size_t symbols, unsigned k) {
    std::size_t total = 1;
    std::size_t level = 1;
    for (unsigned i = 0; i < k; ++i) {
        level = saturating_mul(level, symbols);
        if (total > kUnbounded - level) return kUnbounded;
        total += level;
    }
    return total;
}

}  // namespace latred
