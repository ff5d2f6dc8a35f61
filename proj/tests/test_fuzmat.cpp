#include <random>
#include <vector>

#include <doctest.h>

#include "latred/fuzmat.hpp"
#include "sixstate.hpp"

using namespace latred;
using fixtures::bool_matrix;
using fixtures::bool_vector;

namespace {

const LatticeKind kAllKinds[] = {LatticeKind::boolean, LatticeKind::godel,
                                 LatticeKind::lukasiewicz, LatticeKind::product};

// mt19937_64 output is pinned by the standard, so these are reproducible.
FuzzyMatrix random_matrix(std::mt19937_64& rng, const LatticeSpec& spec, std::size_t rows,
                          std::size_t cols, unsigned grid) {
    std::vector<Value> entries(rows * cols);
    for (Value& v : entries) {
        v = spec.kind() == LatticeKind::boolean
                ? static_cast<Value>(rng() % 2)
                : static_cast<Value>(rng() % (grid + 1)) / grid;
    }
    return FuzzyMatrix(spec, rows, cols, std::move(entries));
}

FuzzyVector random_vector(std::mt19937_64& rng, const LatticeSpec& spec, std::size_t n,
                          unsigned grid) {
    std::vector<Value> entries(n);
    for (Value& v : entries) {
        v = spec.kind() == LatticeKind::boolean
                ? static_cast<Value>(rng() % 2)
                : static_cast<Value>(rng() % (grid + 1)) / grid;
    }
    return FuzzyVector(spec, std::move(entries));
}

/// All square matrices of the given order whose entries come from `values`.
std::vector<FuzzyMatrix> all_matrices(const LatticeSpec& spec, std::size_t order,
                                      const std::vector<Value>& values) {
    const std::size_t cells = order * order;
    std::vector<FuzzyMatrix> out;
    std::vector<std::size_t> pick(cells, 0);
    while (true) {
        std::vector<Value> entries(cells);
        for (std::size_t i = 0; i < cells; ++i) entries[i] = values[pick[i]];
        out.emplace_back(spec, order, order, std::move(entries));
        std::size_t pos = 0;
        while (pos < cells && ++pick[pos] == values.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == cells) break;
    }
    return out;
}

}  // namespace

TEST_CASE("vector and matrix construction is validated") {
    LatticeSpec godel{LatticeKind::godel};
    CHECK_THROWS_AS(FuzzyVector(godel, {}), DimensionMismatchError);
    CHECK_THROWS_AS(FuzzyVector(godel, {0.5, 1.5}), ValidationError);
    CHECK_THROWS_AS(FuzzyMatrix(godel, 2, 2, {0.1, 0.2, 0.3}), DimensionMismatchError);
    CHECK_THROWS_AS(FuzzyMatrix(godel, 0, 2, {}), DimensionMismatchError);
    CHECK_THROWS_AS(FuzzyMatrix(LatticeSpec{LatticeKind::boolean}, 1, 1, {0.5}), ValidationError);
    CHECK_NOTHROW(FuzzyMatrix(godel, 1, 3, {0.0, 0.5, 1.0}));
}

TEST_CASE("operands must share the lattice") {
    FuzzyMatrix a = FuzzyMatrix::identity(LatticeSpec{LatticeKind::godel}, 2);
    FuzzyMatrix b = FuzzyMatrix::identity(LatticeSpec{LatticeKind::product}, 2);
    FuzzyMatrix c = FuzzyMatrix::identity(LatticeSpec{LatticeKind::godel, 1e-6}, 2);
    CHECK_THROWS_AS(mat_mul(a, b), LatticeMismatchError);
    CHECK_THROWS_AS(mat_mul(a, c), LatticeMismatchError);
    CHECK_THROWS_AS(meet(a, b), LatticeMismatchError);
}

TEST_CASE("matrix product over the boolean lattice") {
    FuzzyMatrix a = bool_matrix({"10", "11"});
    FuzzyMatrix b = bool_matrix({"01", "10"});
    FuzzyMatrix ab = mat_mul(a, b);
    CHECK(mat_eq(ab, bool_matrix({"01", "11"})));
    CHECK_THROWS_AS(mat_mul(a, bool_matrix({"111", "111", "111"})), DimensionMismatchError);
}

TEST_CASE("matrix product: identity laws and associativity") {
    std::mt19937_64 rng(7);
    for (LatticeKind kind : kAllKinds) {
        LatticeSpec spec{kind};
        FuzzyMatrix id = FuzzyMatrix::identity(spec, 3);
        for (int rep = 0; rep < 25; ++rep) {
            FuzzyMatrix a = random_matrix(rng, spec, 3, 3, 4);
            FuzzyMatrix b = random_matrix(rng, spec, 3, 3, 4);
            FuzzyMatrix c = random_matrix(rng, spec, 3, 3, 4);
            CHECK(mat_eq(mat_mul(id, a), a));
            CHECK(mat_eq(mat_mul(a, id), a));
            CHECK(mat_eq(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
        }
    }
}

TEST_CASE("vector-matrix products agree with the matrix product") {
    std::mt19937_64 rng(8);
    LatticeSpec spec{LatticeKind::lukasiewicz};
    for (int rep = 0; rep < 20; ++rep) {
        FuzzyVector v = random_vector(rng, spec, 3, 4);
        FuzzyMatrix m = random_matrix(rng, spec, 3, 3, 4);
        FuzzyMatrix row(spec, 1, 3, v.entries());
        FuzzyVector vm = vec_mat_mul(v, m);
        FuzzyMatrix rm = mat_mul(row, m);
        for (std::size_t j = 0; j < 3; ++j) CHECK(spec.eq(vm[j], rm(0, j)));
        FuzzyVector mv = mat_vec_mul(m, v);
        for (std::size_t i = 0; i < 3; ++i) {
            Value expect = 0.0;
            for (std::size_t j = 0; j < 3; ++j) {
                expect = spec.join(expect, spec.tensor(m(i, j), v[j]));
            }
            CHECK(spec.eq(mv[i], expect));
        }
        CHECK(spec.eq(dot(v, v), dot(v, v)));
    }
}

TEST_CASE("residuals are the greatest solutions, exhaustively") {
    // Every pair (M, N) over a small value set, checked against every
    // candidate X over the same set.
    struct Setup {
        LatticeSpec spec;
        std::vector<Value> values;
    };
    const Setup setups[] = {
        {LatticeSpec{LatticeKind::boolean}, {0.0, 1.0}},
        {LatticeSpec{LatticeKind::product}, {0.0, 0.5, 1.0}},
    };
    for (const Setup& setup : setups) {
        std::vector<FuzzyMatrix> all = all_matrices(setup.spec, 2, setup.values);
        for (const FuzzyMatrix& m : all) {
            for (const FuzzyMatrix& n : all) {
                FuzzyMatrix right = right_residual(m, n);
                CHECK(mat_leq(mat_mul(m, right), n));
                FuzzyMatrix left = left_residual(n, m);
                CHECK(mat_leq(mat_mul(left, m), n));
                for (const FuzzyMatrix& x : all) {
                    REQUIRE(mat_leq(mat_mul(m, x), n) == mat_leq(x, right));
                    REQUIRE(mat_leq(mat_mul(x, m), n) == mat_leq(x, left));
                }
            }
        }
    }
}

TEST_CASE("matrix residuation on random instances") {
    std::mt19937_64 rng(9);
    for (LatticeKind kind : kAllKinds) {
        LatticeSpec spec{kind};
        for (int rep = 0; rep < 50; ++rep) {
            FuzzyMatrix m = random_matrix(rng, spec, 3, 3, 4);
            FuzzyMatrix n = random_matrix(rng, spec, 3, 3, 4);
            FuzzyMatrix x = random_matrix(rng, spec, 3, 3, 4);
            CHECK(mat_leq(mat_mul(m, right_residual(m, n)), n));
            CHECK(mat_leq(mat_mul(left_residual(n, m), m), n));
            CHECK(mat_leq(mat_mul(m, x), n) == mat_leq(x, right_residual(m, n)));
            CHECK(mat_leq(mat_mul(x, m), n) == mat_leq(x, left_residual(n, m)));
        }
    }
}

TEST_CASE("vector residuals") {
    LatticeSpec spec{LatticeKind::product};
    FuzzyVector alpha(spec, {0.8, 0.2});
    FuzzyVector beta(spec, {0.4, 1.0});

    FuzzyMatrix right = vec_right_residual(alpha, beta);
    CHECK(spec.eq(right(0, 0), 0.5));
    CHECK(spec.eq(right(0, 1), 1.0));
    CHECK(spec.eq(right(1, 0), 1.0));
    CHECK(spec.eq(right(1, 1), 1.0));

    FuzzyMatrix left = vec_left_residual(beta, alpha);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(spec.eq(left(i, j), right(j, i)));
        }
    }
}

TEST_CASE("vector residuation on random instances") {
    std::mt19937_64 rng(10);
    for (LatticeKind kind : kAllKinds) {
        LatticeSpec spec{kind};
        for (int rep = 0; rep < 50; ++rep) {
            FuzzyVector a = random_vector(rng, spec, 3, 4);
            FuzzyVector b = random_vector(rng, spec, 3, 4);
            FuzzyMatrix m = random_matrix(rng, spec, 3, 3, 4);

            // a * M <= b exactly when M <= vec_right_residual(a, b).
            FuzzyVector am = vec_mat_mul(a, m);
            bool lhs = true;
            for (std::size_t j = 0; j < 3; ++j) lhs = lhs && spec.leq(am[j], b[j]);
            CHECK(lhs == mat_leq(m, vec_right_residual(a, b)));

            // M * a <= b exactly when M <= vec_left_residual(b, a).
            FuzzyVector ma = mat_vec_mul(m, a);
            lhs = true;
            for (std::size_t i = 0; i < 3; ++i) lhs = lhs && spec.leq(ma[i], b[i]);
            CHECK(lhs == mat_leq(m, vec_left_residual(b, a)));
        }
    }
}

TEST_CASE("meet and infimum") {
    LatticeSpec spec{LatticeKind::godel};
    FuzzyMatrix a(spec, 2, 2, {0.2, 0.8, 1.0, 0.5});
    FuzzyMatrix b(spec, 2, 2, {0.3, 0.6, 0.9, 0.5});
    FuzzyMatrix c(spec, 2, 2, {1.0, 1.0, 0.0, 1.0});
    FuzzyMatrix m = meet(a, b);
    CHECK(spec.eq(m(0, 0), 0.2));
    CHECK(spec.eq(m(0, 1), 0.6));
    const FuzzyMatrix family[] = {a, b, c};
    FuzzyMatrix inf = infimum(family);
    CHECK(spec.eq(inf(1, 0), 0.0));
    CHECK(spec.eq(inf(1, 1), 0.5));
    CHECK_THROWS_AS(infimum(std::span<const FuzzyMatrix>{}), ValidationError);
    CHECK_THROWS_AS(meet(a, FuzzyMatrix::identity(spec, 3)), DimensionMismatchError);
}

TEST_CASE("quasi-order validation accepts and rejects correctly") {
    LatticeSpec boolean{LatticeKind::boolean};
    CHECK_NOTHROW(validate_quasi_order(FuzzyMatrix::identity(boolean, 4)));
    CHECK_NOTHROW(validate_quasi_order(FuzzyMatrix::filled(boolean, 3, 3, 1.0)));

    CHECK_THROWS_AS(validate_quasi_order(bool_matrix({"10", "01", "00"})),
                    DimensionMismatchError);

    try {
        validate_quasi_order(bool_matrix({"10", "00"}));
        FAIL("expected NotReflexiveError");
    } catch (const NotReflexiveError& e) {
        CHECK(e.index() == 1);
    }

    try {
        validate_quasi_order(bool_matrix({"110", "011", "001"}));
        FAIL("expected NotTransitiveError");
    } catch (const NotTransitiveError& e) {
        CHECK(e.from() == 0);
        CHECK(e.to() == 2);
    }

    LatticeSpec product{LatticeKind::product};
    QuasiOrderMatrix q = validate_quasi_order(FuzzyMatrix(product, 2, 2, {1.0, 0.5, 0.0, 1.0}));
    CHECK(q.d() == 2);
    // Every reflexive 2x2 matrix is transitive, so a failure needs a chain of
    // length two through a third state: 0 -> 1 -> 2 composes to 0.81 > 0.
    try {
        validate_quasi_order(FuzzyMatrix(product, 3, 3,
                                         {1.0, 0.9, 0.0,
                                          0.0, 1.0, 0.9,
                                          0.0, 0.0, 1.0}));
        FAIL("expected NotTransitiveError");
    } catch (const NotTransitiveError& e) {
        CHECK(e.from() == 0);
        CHECK(e.to() == 2);
    }
}

TEST_CASE("distinct rows of a quasi-order") {
    QuasiOrderMatrix q = validate_quasi_order(bool_matrix(fixtures::kRightInvariant[0]));
    CHECK(q.d() == 2);
    CHECK(q.distinct_row_indices() == std::vector<std::size_t>{0, 2});
    QuasiOrderMatrix id = validate_quasi_order(
        FuzzyMatrix::identity(LatticeSpec{LatticeKind::boolean}, 4));
    CHECK(id.d() == 4);
}

TEST_CASE("splitting a quasi-order into distinct columns and rows") {
    QuasiOrderMatrix q = validate_quasi_order(bool_matrix(fixtures::kRightInvariant[0]));
    RowColumnFactors f = extract_rows_cols(q);
    CHECK(f.rows.rows() == 2);
    CHECK(f.rows.cols() == 6);
    CHECK(f.cols.rows() == 6);
    CHECK(f.cols.cols() == 2);
    CHECK(mat_eq(f.rows, bool_matrix({"111111", "001010"})));
    CHECK(mat_eq(mat_mul(f.cols, f.rows), q.matrix()));
}

TEST_CASE("factorization rebuilds the quasi-order with d factors") {
    for (const auto& golden : {fixtures::kRightInvariant, fixtures::kLeftInvariant}) {
        for (const auto& rows : golden) {
            QuasiOrderMatrix q = validate_quasi_order(bool_matrix(rows));
            Factorization f = r_factorize(q);
            CHECK(f.right.rows() == q.d());
            CHECK(f.left.cols() == q.d());
            CHECK(mat_eq(mat_mul(f.left, f.right), q.matrix()));
        }
    }

    QuasiOrderMatrix id = validate_quasi_order(
        FuzzyMatrix::identity(LatticeSpec{LatticeKind::boolean}, 3));
    Factorization f = r_factorize(id);
    CHECK(f.right.rows() == 3);
    CHECK(mat_eq(f.left, id.matrix()));
    CHECK(mat_eq(f.right, id.matrix()));
}

TEST_CASE("factorization on random quasi-orders over every lattice") {
    std::mt19937_64 rng(11);
    for (LatticeKind kind : kAllKinds) {
        LatticeSpec spec{kind};
        int built = 0;
        while (built < 10) {
            // Transitive closure of a random matrix with forced diagonal.
            FuzzyMatrix m = random_matrix(rng, spec, 4, 4, 4);
            std::vector<Value> entries = m.entries();
            for (std::size_t i = 0; i < 4; ++i) entries[i * 4 + i] = 1.0;
            FuzzyMatrix q(spec, 4, 4, std::move(entries));
            for (int step = 0; step < 4; ++step) {
                FuzzyMatrix sq = mat_mul(q, q);
                if (mat_leq(sq, q)) break;
                // Entrywise join to keep the closure ascending.
                std::vector<Value> joined(16);
                for (std::size_t i = 0; i < 16; ++i) {
                    joined[i] = spec.join(q.entries()[i], sq.entries()[i]);
                }
                q = FuzzyMatrix(spec, 4, 4, std::move(joined));
            }
            if (!mat_leq(mat_mul(q, q), q)) continue;
            ++built;
            QuasiOrderMatrix qo = validate_quasi_order(q);
            Factorization f = r_factorize(qo);
            CHECK(f.right.rows() == qo.d());
            CHECK(mat_eq(mat_mul(f.left, f.right), qo.matrix()));
        }
    }
}
