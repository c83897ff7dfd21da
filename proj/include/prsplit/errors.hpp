#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prsplit {

/// Invalid run or grid configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live on different grids.
class GridMismatch : public std::invalid_argument {
public:
    GridMismatch() : std::invalid_argument("operands are defined on different grids") {}
};

/// Base for failures of the numerics themselves. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// NaN or Inf found in a state.
class NonFiniteState : public NumericalError {
public:
    NonFiniteState(const std::string& what, std::size_t step)
        : NumericalError(what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Newton iteration did not reach its tolerance.
class IterationError : public NumericalError {
public:
    IterationError(const std::string& what, double x1, double x2, double residual)
        : NumericalError(what), last_{x1, x2}, residual_(residual) {}
    double last_first() const { return last_[0]; }
    double last_second() const { return last_[1]; }
    double residual() const { return residual_; }

private:
    double last_[2];
    double residual_;
};

/// A pointwise nonlinear resolvent could not be evaluated at some grid point.
class StepFailure : public NumericalError {
public:
    StepFailure(const std::string& what, std::size_t row, std::size_t col)
        : NumericalError(what), row_(row), col_(col) {}
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

/// Zero or negative error values fed to an order estimate, or a negative squared norm.
class DegenerateMeasurement : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A resolvent was requested at a step size outside its range condition.
class StepSizeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Step size violates h·max{M[A],M[F]} bound of the chosen scheme while enforcement is on.
class StabilityViolation : public ConfigError {
public:
    using ConfigError::ConfigError;
};

} // namespace prsplit
