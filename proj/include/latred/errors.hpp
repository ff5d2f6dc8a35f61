#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latred {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document: bad JSON, missing or mistyped fields,
/// unknown enumeration names.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a contract: dimension or lattice
/// mismatches, values outside the carrier, failed quasi-order checks.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LatticeMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotReflexiveError : public ValidationError {
public:
    explicit NotReflexiveError(std::size_t index)
        : ValidationError("matrix is not reflexive: diagonal entry " + std::to_string(index) +
                          " is below 1"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class NotTransitiveError : public ValidationError {
public:
    NotTransitiveError(std::size_t from, std::size_t to)
        : ValidationError("matrix is not transitive: entry (" + std::to_string(from) + ", " +
                          std::to_string(to) + ") of the square exceeds the matrix"),
          from_(from),
          to_(to) {}

    std::size_t from() const { return from_; }
    std::size_t to() const { return to_; }

private:
    std::size_t from_;
    std::size_t to_;
};

class UnknownSymbolError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A word-tree or path enumeration would exceed the configured cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// A postcondition that is guaranteed to hold failed anyway; always a bug,
/// never a legitimate runtime outcome.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace latred
