#pragma once

#include <array>
#include <functional>
#include <vector>

namespace prsplit {

/// c3·x³ + c2·x² + c1·x + c0.
struct CubicCoeffs {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }
};

/// Unique real root of c3·x³ + c1·x = r for c3, c1 > 0 (Cardano, then Newton polish).
/// Throws std::invalid_argument on a precondition violation.
double solve_increasing_cubic(double c3, double c1, double r);

/// All real roots in ascending order, roots closer than 1e-9 merged.
/// Throws std::invalid_argument when c3 vanishes relative to the other coefficients.
std::vector<double> real_roots_cubic(const CubicCoeffs& c);

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Residual and Jacobian evaluator for a 2×2 nonlinear system.
using ResidualJacobian = std::function<void(const Vec2& x, Vec2& residual, Mat2& jacobian)>;

/// Damped Newton iteration. Returns once max|residual| ≤ tol; throws IterationError
/// carrying the last iterate after max_iter steps or on a singular Jacobian.
Vec2 newton_2x2(const ResidualJacobian& eval, Vec2 guess, double tol, int max_iter);

} // namespace prsplit
