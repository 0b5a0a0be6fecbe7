#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed meshes, files, or arguments. The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed (solver breakdown, equivalence violation). Exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonManifoldEdge : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonManifoldVertex : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Two triangles sharing an edge induce the same orientation on it (they overlap).
class InconsistentOrientation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateTriangle : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateTriangle : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DanglingVertex : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PerturbationFailed : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateSubdivisionSimplex : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoInteriorVertices : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : ValidationError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : ValidationError(what) {}

    /// 1-based line number, 0 when the error is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

class IoError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MaxIterations : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotPositiveDefinite : public NumericalError {
public:
    NotPositiveDefinite(const std::string& what, std::size_t iteration)
        : NumericalError(what), iteration_(iteration) {}

    [[nodiscard]] std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

}  // namespace decp
