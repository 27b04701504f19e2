#pragma once

#include <stdexcept>
#include <string>

namespace oblique {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand dimensions do not line up (rows/cols).
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Subspaces live in different ambient spaces.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

/// An iterative decomposition failed to converge.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// A matrix required to be positive semidefinite is not.
class NotPositive : public Error {
public:
    using Error::Error;
};

/// Matrix required to be (numerically) invertible is singular.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// The Douglas range-inclusion criterion R(B) <= R(A) fails.
/// `borderline` marks residuals inside the gray zone just above the
/// acceptance threshold, where the rank policy refuses to decide silently.
class RangeNotIncluded : public Error {
public:
    RangeNotIncluded(const std::string& what, double residual, bool borderline)
        : Error(what), residual(residual), borderline(borderline) {}
    double residual;
    bool borderline;
};

/// The pair (A, S) admits no A-selfadjoint projection with range S.
class NotCompatible : public Error {
public:
    using Error::Error;
};

/// Two operators expected to share their range do not.
class RangeMismatch : public Error {
public:
    using Error::Error;
};

/// Argument expected to be an orthogonal (selfadjoint) projection is not.
class NotHermitianProjection : public Error {
public:
    using Error::Error;
};

/// A built-in cross-check between two independent computation routes failed.
class SelfCheckError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries source location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string source, int line)
        : Error(source + ":" + std::to_string(line) + ": " + what),
          source(std::move(source)),
          line(line) {}
    std::string source;
    int line;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace oblique
