#include "latred/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace latred {

const char* to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::boolean: return "boolean";
        case LatticeKind::godel: return "godel";
        case LatticeKind::lukasiewicz: return "lukasiewicz";
        case LatticeKind::product: return "product";
    }
    throw InternalError("unhandled lattice kind");
}

LatticeKind lattice_kind_from_string(const std::string& name) {
    if (name == "boolean") return LatticeKind::boolean;
    if (name == "godel") return LatticeKind::godel;
    if (name == "lukasiewicz") return LatticeKind::lukasiewicz;
    if (name == "product") return LatticeKind::product;
    throw ParseError("unknown lattice kind \"" + name +
                     "\" (expected boolean, godel, lukasiewicz, or product)");
}

LatticeSpec::LatticeSpec(LatticeKind kind)
    : LatticeSpec(kind, kind == LatticeKind::boolean ? 0.0 : kDefaultEpsilon) {}

LatticeSpec::LatticeSpec(LatticeKind kind, double epsilon) : kind_(kind), epsilon_(epsilon) {
    if (!(epsilon >= 0.0)) {
        throw ValidationError("epsilon must be non-negative");
    }
    if (kind == LatticeKind::boolean && epsilon != 0.0) {
        throw ValidationError("the boolean lattice is exact; epsilon must be 0");
    }
    if (kind != LatticeKind::boolean && epsilon == 0.0) {
        throw ValidationError("epsilon must be positive for real-valued lattices");
    }
}

Value LatticeSpec::join(Value a, Value b) const {
    return std::max(a, b);
}

Value LatticeSpec::meet(Value a, Value b) const {
    return std::min(a, b);
}

Value LatticeSpec::tensor(Value a, Value b) const {
    switch (kind_) {
        case LatticeKind::boolean: return (a != 0.0 && b != 0.0) ? 1.0 : 0.0;
        case LatticeKind::godel: return std::min(a, b);
        case LatticeKind::lukasiewicz: return std::max(0.0, a + b - 1.0);
        case LatticeKind::product: return a * b;
    }
    throw InternalError("unhandled lattice kind");
}

Value LatticeSpec::residuum(Value a, Value b) const {
    switch (kind_) {
        case LatticeKind::boolean: return (a == 0.0 || b != 0.0) ? 1.0 : 0.0;
        case LatticeKind::godel: return leq(a, b) ? 1.0 : b;
        case LatticeKind::lukasiewicz: return std::min(1.0, 1.0 - a + b);
        // leq(a, b) failing means a > epsilon > 0, so the division is safe.
        case LatticeKind::product: return leq(a, b) ? 1.0 : b / a;
    }
    throw InternalError("unhandled lattice kind");
}

bool LatticeSpec::leq(Value a, Value b) const {
    return a <= b + epsilon_;
}

bool LatticeSpec::eq(Value a, Value b) const {
    return std::abs(a - b) <= epsilon_;
}

void LatticeSpec::validate_value(Value v) const {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("truth degree " + std::to_string(v) + " lies outside [0, 1]");
    }
    if (kind_ == LatticeKind::boolean && v != 0.0 && v != 1.0) {
        throw ValidationError("boolean truth degree must be exactly 0 or 1, got " +
                              std::to_string(v));
    }
}

}  // namespace latred
