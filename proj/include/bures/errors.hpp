#pragma once

#include <stdexcept>
#include <string>

namespace bures {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or non-square dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input fails a precondition that is checkable without numerics
/// (non-orthogonal matrix, non-positive eigenvalue list, asymmetric file, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A matrix failed the positive-definiteness gate.
class NotSpdError : public Error {
public:
    using Error::Error;
};

/// A computed quantity violated its residual bound or left its valid range.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Degenerate section / degenerate projection input.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its allowed interval (use the IVP entry points to extend).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A geodesic parameter reached or passed the boundary of the SPD cone.
/// Carries the maximal extension so callers can clamp or re-parameterize.
class BoundaryError : public Error {
public:
    BoundaryError(const std::string& what, double eps_max)
        : Error(what), eps_max_(eps_max) {}

    double eps_max() const { return eps_max_; }

private:
    double eps_max_;
};

/// Input file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bures
