#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

/// Base class for all framekit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension or shape violation (mismatched sizes, non-square input, empty family).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Asymmetry of a supposedly Hermitian matrix above tolerance.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

/// Iterative solver hit its sweep cap before reaching the convergence target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Cholesky pivot at or below the positive-definiteness threshold.
class NotHpdError : public Error {
public:
    using Error::Error;
};

/// Column collapse during orthogonalization.
class RankDeficientError : public Error {
public:
    using Error::Error;
};

/// Zero scalar where a nonzero one is required.
class ZeroScalarError : public Error {
public:
    using Error::Error;
};

/// Family fails the frame criterion (lower bound below threshold).
class NotAFrameError : public Error {
public:
    using Error::Error;
};

/// Frame is not normalized tight where the operation requires it.
class NotNormalizedTightError : public Error {
public:
    using Error::Error;
};

/// Operator is singular to working tolerance.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// Requested result exceeds the configured size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace framekit
