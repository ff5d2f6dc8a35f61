#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latred/lattice.hpp"

namespace latred {

/// Fuzzy vector: truth degrees indexed by 0..size-1, tied to a lattice.
/// Construction validates every entry against the carrier.
class FuzzyVector {
public:
    FuzzyVector(LatticeSpec spec, std::vector<Value> entries);

    std::size_t size() const { return entries_.size(); }
    const LatticeSpec& spec() const { return spec_; }
    Value operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Value>& entries() const { return entries_; }

private:
    LatticeSpec spec_;
    std::vector<Value> entries_;
};

/// Dense row-major fuzzy matrix tied to a lattice. Both dimensions must be
/// at least 1; construction validates every entry against the carrier.
class FuzzyMatrix {
public:
    FuzzyMatrix(LatticeSpec spec, std::size_t rows, std::size_t cols, std::vector<Value> entries);

    static FuzzyMatrix filled(LatticeSpec spec, std::size_t rows, std::size_t cols, Value v);
    static FuzzyMatrix identity(LatticeSpec spec, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const LatticeSpec& spec() const { return spec_; }
    Value operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Value>& entries() const { return entries_; }

private:
    LatticeSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Value> entries_;
};

/// A square fuzzy matrix that passed the reflexivity and transitivity
/// checks. Only validate_quasi_order creates instances, so holding one is
/// proof of validation.
class QuasiOrderMatrix {
public:
    const FuzzyMatrix& matrix() const { return matrix_; }
    const LatticeSpec& spec() const { return matrix_.spec(); }
    std::size_t order() const { return matrix_.rows(); }

    /// First occurrence of each distinct row, in ascending index order.
    /// For a quasi-order these are also the first occurrences of the
    /// distinct columns.
    const std::vector<std::size_t>& distinct_row_indices() const { return distinct_rows_; }

    /// Number of distinct rows (equivalently, distinct columns).
    std::size_t d() const { return distinct_rows_.size(); }

private:
    friend QuasiOrderMatrix validate_quasi_order(FuzzyMatrix matrix);

    QuasiOrderMatrix(FuzzyMatrix matrix, std::vector<std::size_t> distinct_rows)
        : matrix_(std::move(matrix)), distinct_rows_(std::move(distinct_rows)) {}

    FuzzyMatrix matrix_;
    std::vector<std::size_t> distinct_rows_;
};

/// Matrix product over the lattice: out(i,j) = join_s m(i,s) * n(s,j).
FuzzyMatrix mat_mul(const FuzzyMatrix& m, const FuzzyMatrix& n);

/// Row vector times matrix: out(j) = join_i v(i) * m(i,j).
FuzzyVector vec_mat_mul(const FuzzyVector& v, const FuzzyMatrix& m);

/// Matrix times column vector: out(i) = join_j m(i,j) * v(j).
FuzzyVector mat_vec_mul(const FuzzyMatrix& m, const FuzzyVector& v);

/// Scalar product join_i a(i) * b(i).
Value dot(const FuzzyVector& a, const FuzzyVector& b);

/// Greatest X with m * X <= n, both square of the same order:
/// out(j,k) = meet_i residuum(m(i,j), n(i,k)).
FuzzyMatrix right_residual(const FuzzyMatrix& m, const FuzzyMatrix& n);

/// Greatest X with X * m <= n, both square of the same order:
/// out(i,j) = meet_k residuum(m(j,k), n(i,k)).
FuzzyMatrix left_residual(const FuzzyMatrix& n, const FuzzyMatrix& m);

/// Greatest square M with a * M <= b (row vectors of equal size):
/// out(i,j) = residuum(a(i), b(j)).
FuzzyMatrix vec_right_residual(const FuzzyVector& a, const FuzzyVector& b);

/// Greatest square M with M * a <= b (column vectors of equal size):
/// out(i,j) = residuum(a(j), b(i)); the transpose of vec_right_residual.
FuzzyMatrix vec_left_residual(const FuzzyVector& b, const FuzzyVector& a);

/// Entrywise meet of two matrices of identical shape.
FuzzyMatrix meet(const FuzzyMatrix& m, const FuzzyMatrix& n);

/// Entrywise meet of a non-empty family of same-shaped matrices.
FuzzyMatrix infimum(std::span<const FuzzyMatrix> family);

/// Entrywise tolerant comparisons; shapes must match.
bool mat_leq(const FuzzyMatrix& m, const FuzzyMatrix& n);
bool mat_eq(const FuzzyMatrix& m, const FuzzyMatrix& n);
bool vec_eq(const FuzzyVector& a, const FuzzyVector& b);

/// Checks that the matrix is square, reflexive (diagonal at least 1) and
/// transitive (its square is entrywise below it), then wraps it. Throws
/// NotReflexiveError or NotTransitiveError naming the offending entries.
QuasiOrderMatrix validate_quasi_order(FuzzyMatrix matrix);

struct RowColumnFactors {
    FuzzyMatrix rows;  ///< d x n: the distinct rows of Q, in first-occurrence order.
    FuzzyMatrix cols;  ///< n x d: the matching distinct columns of Q.
};

/// Splits Q into its distinct columns and rows, so that cols * rows == Q.
RowColumnFactors extract_rows_cols(const QuasiOrderMatrix& q);

struct Factorization {
    FuzzyMatrix left;   ///< n x r
    FuzzyMatrix right;  ///< r x n
};

/// Factorizes Q as left * right, starting from the distinct columns/rows
/// and greedily dropping any row of `right` that is a linear combination of
/// the remaining ones (scanning ascending, restarting after each removal).
/// Over a linearly ordered carrier no row is ever droppable, so r == d(Q);
/// the greedy pass still runs so the identity is verified either way.
Factorization r_factorize(const QuasiOrderMatrix& q);

}  // namespace latred
