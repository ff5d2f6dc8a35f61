#include "latred/fuzmat.hpp"

#include <string>
#include <utility>

namespace latred {

namespace {

void check_same_spec(const LatticeSpec& a, const LatticeSpec& b) {
    if (!(a == b)) {
        throw LatticeMismatchError("operands use different lattices or tolerances");
    }
}

std::string shape(const FuzzyMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool rows_eq(const FuzzyMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.spec().eq(m(a, j), m(b, j))) return false;
    }
    return true;
}

bool cols_eq(const FuzzyMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.spec().eq(m(i, a), m(i, b))) return false;
    }
    return true;
}

}  // namespace

FuzzyVector::FuzzyVector(LatticeSpec spec, std::vector<Value> entries)
    : spec_(spec), entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DimensionMismatchError("vector must have at least one entry");
    }
    for (Value v : entries_) spec_.validate_value(v);
}

FuzzyMatrix::FuzzyMatrix(LatticeSpec spec, std::size_t rows, std::size_t cols,
                         std::vector<Value> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionMismatchError("matrix dimensions must be at least 1");
    }
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatchError("matrix of shape " + shape(*this) + " needs " +
                                     std::to_string(rows_ * cols_) + " entries, got " +
                                     std::to_string(entries_.size()));
    }
    for (Value v : entries_) spec_.validate_value(v);
}

FuzzyMatrix FuzzyMatrix::filled(LatticeSpec spec, std::size_t rows, std::size_t cols, Value v) {
    return FuzzyMatrix(spec, rows, cols, std::vector<Value>(rows * cols, v));
}

FuzzyMatrix FuzzyMatrix::identity(LatticeSpec spec, std::size_t n) {
    std::vector<Value> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
    return FuzzyMatrix(spec, n, n, std::move(entries));
}

FuzzyMatrix mat_mul(const FuzzyMatrix& m, const FuzzyMatrix& n) {
    check_same_spec(m.spec(), n.spec());
    if (m.cols() != n.rows()) {
        throw DimensionMismatchError("cannot multiply " + shape(m) + " by " + shape(n));
    }
    const LatticeSpec& spec = m.spec();
    std::vector<Value> out(m.rows() * n.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n.cols(); ++j) {
            Value acc = 0.0;
            for (std::size_t s = 0; s < m.cols(); ++s) {
                acc = spec.join(acc, spec.tensor(m(i, s), n(s, j)));
            }
            out[i * n.cols() + j] = acc;
        }
    }
    return FuzzyMatrix(spec, m.rows(), n.cols(), std::move(out));
}

FuzzyVector vec_mat_mul(const FuzzyVector& v, const FuzzyMatrix& m) {
    check_same_spec(v.spec(), m.spec());
    if (v.size() != m.rows()) {
        throw DimensionMismatchError("cannot multiply vector of size " + std::to_string(v.size()) +
                                     " by " + shape(m));
    }
    const LatticeSpec& spec = v.spec();
    std::vector<Value> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Value acc = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            acc = spec.join(acc, spec.tensor(v[i], m(i, j)));
        }
        out[j] = acc;
    }
    return FuzzyVector(spec, std::move(out));
}

FuzzyVector mat_vec_mul(const FuzzyMatrix& m, const FuzzyVector& v) {
    check_same_spec(m.spec(), v.spec());
    if (m.cols() != v.size()) {
        throw DimensionMismatchError("cannot multiply " + shape(m) + " by vector of size " +
                                     std::to_string(v.size()));
    }
    const LatticeSpec& spec = v.spec();
    std::vector<Value> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Value acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc = spec.join(acc, spec.tensor(m(i, j), v[j]));
        }
        out[i] = acc;
    }
    return FuzzyVector(spec, std::move(out));
}

Value dot(const FuzzyVector& a, const FuzzyVector& b) {
    check_same_spec(a.spec(), b.spec());
    if (a.size() != b.size()) {
        throw DimensionMismatchError("dot product of vectors of sizes " +
                                     std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    const LatticeSpec& spec = a.spec();
    Value acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = spec.join(acc, spec.tensor(a[i], b[i]));
    }
    return acc;
}

namespace {

void check_square_pair(const FuzzyMatrix& m, const FuzzyMatrix& n, const char* what) {
    check_same_spec(m.spec(), n.spec());
    if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows()) {
        throw DimensionMismatchError(std::string(what) + " needs square matrices of equal order, got " +
                                     shape(m) + " and " + shape(n));
    }
}

}  // namespace

FuzzyMatrix right_residual(const FuzzyMatrix& m, const FuzzyMatrix& n) {
    check_square_pair(m, n, "right residual");
    const LatticeSpec& spec = m.spec();
    const std::size_t order = m.rows();
    std::vector<Value> out(order * order);
    for (std::size_t j = 0; j < order; ++j) {
        for (std::size_t k = 0; k < order; ++k) {
            Value acc = 1.0;
            for (std::size_t i = 0; i < order; ++i) {
                acc = spec.meet(acc, spec.residuum(m(i, j), n(i, k)));
            }
            out[j * order + k] = acc;
        }
    }
    return FuzzyMatrix(spec, order, order, std::move(out));
}

FuzzyMatrix left_residual(const FuzzyMatrix& n, const FuzzyMatrix& m) {
    check_square_pair(m, n, "left residual");
    const LatticeSpec& spec = m.spec();
    const std::size_t order = m.rows();
    std::vector<Value> out(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            Value acc = 1.0;
            for (std::size_t k = 0; k < order; ++k) {
                acc = spec.meet(acc, spec.residuum(m(j, k), n(i, k)));
            }
            out[i * order + j] = acc;
        }
    }
    return FuzzyMatrix(spec, order, order, std::move(out));
}

FuzzyMatrix vec_right_residual(const FuzzyVector& a, const FuzzyVector& b) {
    check_same_spec(a.spec(), b.spec());
    if (a.size() != b.size()) {
        throw DimensionMismatchError("vector residual needs equal sizes, got " +
                                     std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    const LatticeSpec& spec = a.spec();
    const std::size_t n = a.size();
    std::vector<Value> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = spec.residuum(a[i], b[j]);
        }
    }
    return FuzzyMatrix(spec, n, n, std::move(out));
}

FuzzyMatrix vec_left_residual(const FuzzyVector& b, const FuzzyVector& a) {
    check_same_spec(a.spec(), b.spec());
    if (a.size() != b.size()) {
        throw DimensionMismatchError("vector residual needs equal sizes, got " +
                                     std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    const LatticeSpec& spec = a.spec();
    const std::size_t n = a.size();
    std::vector<Value> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = spec.residuum(a[j], b[i]);
        }
    }
    return FuzzyMatrix(spec, n, n, std::move(out));
}

FuzzyMatrix meet(const FuzzyMatrix& m, const FuzzyMatrix& n) {
    check_same_spec(m.spec(), n.spec());
    if (m.rows() != n.rows() || m.cols() != n.cols()) {
        throw DimensionMismatchError("entrywise meet of " + shape(m) + " and " + shape(n));
    }
    const LatticeSpec& spec = m.spec();
    std::vector<Value> out(m.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = spec.meet(m.entries()[i], n.entries()[i]);
    }
    return FuzzyMatrix(spec, m.rows(), m.cols(), std::move(out));
}

FuzzyMatrix infimum(std::span<const FuzzyMatrix> family) {
    if (family.empty()) {
        throw ValidationError("infimum of an empty matrix family");
    }
    FuzzyMatrix acc = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) {
        acc = meet(acc, family[i]);
    }
    return acc;
}

bool mat_leq(const FuzzyMatrix& m, const FuzzyMatrix& n) {
    check_same_spec(m.spec(), n.spec());
    if (m.rows() != n.rows() || m.cols() != n.cols()) {
        throw DimensionMismatchError("comparing " + shape(m) + " with " + shape(n));
    }
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        if (!m.spec().leq(m.entries()[i], n.entries()[i])) return false;
    }
    return true;
}

bool mat_eq(const FuzzyMatrix& m, const FuzzyMatrix& n) {
    check_same_spec(m.spec(), n.spec());
    if (m.rows() != n.rows() || m.cols() != n.cols()) {
        throw DimensionMismatchError("comparing " + shape(m) + " with " + shape(n));
    }
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        if (!m.spec().eq(m.entries()[i], n.entries()[i])) return false;
    }
    return true;
}

bool vec_eq(const FuzzyVector& a, const FuzzyVector& b) {
    check_same_spec(a.spec(), b.spec());
    if (a.size() != b.size()) {
        throw DimensionMismatchError("comparing vectors of sizes " + std::to_string(a.size()) +
                                     " and " + std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a.spec().eq(a[i], b[i])) return false;
    }
    return true;
}

QuasiOrderMatrix validate_quasi_order(FuzzyMatrix matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw DimensionMismatchError("quasi-order matrix must be square, got " + shape(matrix));
    }
    const LatticeSpec& spec = matrix.spec();
    const std::size_t n = matrix.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!spec.leq(1.0, matrix(i, i))) throw NotReflexiveError(i);
    }
    FuzzyMatrix square = mat_mul(matrix, matrix);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!spec.leq(square(i, j), matrix(i, j))) throw NotTransitiveError(i, j);
        }
    }
    std::vector<std::size_t> row_firsts;
    for (std::size_t i = 0; i < n; ++i) {
        bool fresh = true;
        for (std::size_t f : row_firsts) {
            if (rows_eq(matrix, f, i)) {
                fresh = false;
                break;
            }
        }
        if (fresh) row_firsts.push_back(i);
    }
    std::vector<std::size_t> col_firsts;
    for (std::size_t j = 0; j < n; ++j) {
        bool fresh = true;
        for (std::size_t f : col_firsts) {
            if (cols_eq(matrix, f, j)) {
                fresh = false;
                break;
            }
        }
        if (fresh) col_firsts.push_back(j);
    }
    // A quasi-order has as many distinct rows as columns, at the same first
    // occurrences; a mismatch means the tolerance has broken down.
    if (row_firsts != col_firsts) {
        throw InternalError("distinct rows and columns of a quasi-order disagree");
    }
    return QuasiOrderMatrix(std::move(matrix), std::move(row_firsts));
}

RowColumnFactors extract_rows_cols(const QuasiOrderMatrix& q) {
    const FuzzyMatrix& m = q.matrix();
    const LatticeSpec& spec = q.spec();
    const std::size_t n = q.order();
    const auto& firsts = q.distinct_row_indices();
    const std::size_t d = firsts.size();
    std::vector<Value> rows(d * n);
    std::vector<Value> cols(n * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t s = 0; s < n; ++s) {
            rows[a * n + s] = m(firsts[a], s);
            cols[s * d + a] = m(s, firsts[a]);
        }
    }
    RowColumnFactors out{FuzzyMatrix(spec, d, n, std::move(rows)),
                         FuzzyMatrix(spec, n, d, std::move(cols))};
    if (!mat_eq(mat_mul(out.cols, out.rows), m)) {
        throw InternalError("distinct columns times distinct rows failed to rebuild the quasi-order");
    }
    return out;
}

Factorization r_factorize(const QuasiOrderMatrix& q) {
    const LatticeSpec& spec = q.spec();
    const std::size_t n = q.order();
    RowColumnFactors base = extract_rows_cols(q);

    // Working copies: right factor as rows, left factor as columns.
    std::vector<std::vector<Value>> r_rows;
    std::vector<std::vector<Value>> l_cols;
    for (std::size_t a = 0; a < base.rows.rows(); ++a) {
        std::vector<Value> row(n), col(n);
        for (std::size_t s = 0; s < n; ++s) {
            row[s] = base.rows(a, s);
            col[s] = base.cols(s, a);
        }
        r_rows.push_back(std::move(row));
        l_cols.push_back(std::move(col));
    }

    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < r_rows.size() && !removed; ++i) {
            // Greatest coefficients c_j with c_j * row_j <= row_i, and the
            // join of the scaled rows they produce.
            std::vector<Value> coeff(r_rows.size(), 0.0);
            std::vector<Value> combo(n, 0.0);
            for (std::size_t j = 0; j < r_rows.size(); ++j) {
                if (j == i) continue;
                Value c = 1.0;
                for (std::size_t t = 0; t < n; ++t) {
                    c = spec.meet(c, spec.residuum(r_rows[j][t], r_rows[i][t]));
                }
                coeff[j] = c;
                for (std::size_t t = 0; t < n; ++t) {
                    combo[t] = spec.join(combo[t], spec.tensor(c, r_rows[j][t]));
                }
            }
            bool redundant = true;
            for (std::size_t t = 0; t < n; ++t) {
                if (!spec.eq(combo[t], r_rows[i][t])) {
                    redundant = false;
                    break;
                }
            }
            if (!redundant) continue;
            // Fold column i into the survivors so the product is unchanged,
            // then drop row and column i and restart the scan.
            for (std::size_t j = 0; j < r_rows.size(); ++j) {
                if (j == i) continue;
                for (std::size_t s = 0; s < n; ++s) {
                    l_cols[j][s] = spec.join(l_cols[j][s], spec.tensor(l_cols[i][s], coeff[j]));
                }
            }
            r_rows.erase(r_rows.begin() + static_cast<std::ptrdiff_t>(i));
            l_cols.erase(l_cols.begin() + static_cast<std::ptrdiff_t>(i));
            removed = true;
        }
    }

    const std::size_t r = r_rows.size();
    std::vector<Value> right_entries(r * n);
    std::vector<Value> left_entries(n * r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t s = 0; s < n; ++s) {
            right_entries[a * n + s] = r_rows[a][s];
            left_entries[s * r + a] = l_cols[a][s];
        }
    }
    Factorization out{FuzzyMatrix(spec, n, r, std::move(left_entries)),
                      FuzzyMatrix(spec, r, n, std::move(right_entries))};
    if (!mat_eq(mat_mul(out.left, out.right), q.matrix())) {
        throw InternalError("factorization failed to rebuild the quasi-order");
    }
    return out;
}

}  // namespace latred
