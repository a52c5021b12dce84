#pragma once

#include <stdexcept>

namespace fremder {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes disagree: non-square input, vector length mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Non-finite entry or scalar.
class ValueError : public Error {
public:
    using Error::Error;
};

/// Input does not have the declared structure (Hermitian, skew-Hermitian, normal).
class StructureError : public Error {
public:
    using Error::Error;
};

/// A solver's structural hypothesis does not hold (e.g. indefinite skew part for the projected eigenproblem).
class HypothesisError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Oracle asked to work beyond its documented size limit.
class ScaleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fremder
