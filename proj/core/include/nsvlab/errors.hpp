#pragma once

#include <stdexcept>
#include <string>

namespace nsv {

/// Bad parameters, malformed files, violated invariants. CLI exit code 2.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural mismatch between objects (grid sizes, snapshot schedules).
class StructuralError : public ValidationError {
  public:
    explicit StructuralError(const std::string& msg) : ValidationError(msg) {}
};

/// Numerical failure: nonconvergent quadrature, NaN/overflow during time
/// integration. CLI exit code 3.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nsv
