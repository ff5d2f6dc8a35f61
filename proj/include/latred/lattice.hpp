#pragma once

#include <string>

#include "latred/errors.hpp"

namespace latred {

/// Truth degrees live in the unit interval; the boolean structure restricts
/// them to {0, 1}.
using Value = double;

enum class LatticeKind {
    boolean,
    godel,
    lukasiewicz,
    product,
};

const char* to_string(LatticeKind kind);

/// Accepts "boolean", "godel", "lukasiewicz", "product"; throws ParseError
/// for anything else.
LatticeKind lattice_kind_from_string(const std::string& name);

/// One of four complete residuated lattices on [0, 1], bundled with the
/// tolerance used for every comparison of truth degrees.
///
/// All four carriers are chains, so join and meet are max and min. The
/// multiplication / residuum pairs are:
///
///   boolean      a AND b          (NOT a) OR b
///   godel        min(a, b)        a <= b ? 1 : b
///   lukasiewicz  max(0, a+b-1)    min(1, 1-a+b)
///   product      a * b            a <= b ? 1 : b/a
///
/// Multiplication and residuum are adjoint: tensor(a, b) <= c exactly when
/// a <= residuum(b, c).
///
/// Comparisons are tolerant: leq(a, b) means a <= b + epsilon and
/// eq(a, b) means |a - b| <= epsilon. The boolean structure is exact
/// (epsilon = 0); the other three default to epsilon = 1e-9 to absorb
/// floating-point drift in products and residuals.
class LatticeSpec {
public:
    static constexpr double kDefaultEpsilon = 1e-9;

    /// Uses the kind's default tolerance: 0 for boolean, 1e-9 otherwise.
    explicit LatticeSpec(LatticeKind kind);

    /// Throws ValidationError unless epsilon is 0 for boolean and positive
    /// for the other kinds.
    LatticeSpec(LatticeKind kind, double epsilon);

    LatticeKind kind() const { return kind_; }
    double epsilon() const { return epsilon_; }

    Value join(Value a, Value b) const;
    Value meet(Value a, Value b) const;
    Value tensor(Value a, Value b) const;
    Value residuum(Value a, Value b) const;

    /// a <= b up to the tolerance.
    bool leq(Value a, Value b) const;
    /// |a - b| <= tolerance.
    bool eq(Value a, Value b) const;

    /// Throws ValidationError if v lies outside the carrier (outside [0, 1],
    /// NaN, or neither 0 nor 1 for the boolean structure).
    void validate_value(Value v) const;

    bool operator==(const LatticeSpec& other) const = default;

private:
    LatticeKind kind_;
    double epsilon_;
};

}  // namespace latred
