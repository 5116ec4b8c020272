#pragma once

#include <stdexcept>
#include <string>

namespace eulerwaves {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point outside the chart range or inside a singular margin.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil left a non-periodic range.
class StencilError : public Error {
public:
    using Error::Error;
};

/// Operation called on a manifold of the wrong dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operand violates an operation precondition (e.g. time-dependent input).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Root search failed: no sign change, or the requested branch does not exist.
class BracketError : public Error {
public:
    using Error::Error;
};

/// Special function requested outside its supported accuracy range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Construction collapses to the zero field or a singular eigenvalue.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Invalid user parameter (catalogue key, out-of-range index, bad profile).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Warped-product profile fails positivity or the ODE integration broke down.
class ProfileError : public Error {
public:
    using Error::Error;
};

}  // namespace eulerwaves
