#include "prsplit/cubic.hpp"

#include "prsplit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prsplit {

namespace {

// Newton steps that are kept only while they reduce |p(x)|.
double polish(const CubicCoeffs& p, double x, int max_steps) {
    double fx = p(x);
    for (int it = 0; it < max_steps && fx != 0.0; ++it) {
        const double dfx = p.derivative(x);
        if (dfx == 0.0 || !std::isfinite(dfx)) break;
        const double xn = x - fx / dfx;
        const double fn = p(xn);
        if (!(std::abs(fn) < std::abs(fx))) break;
        x = xn;
        fx = fn;
    }
    return x;
}

double max_abs(std::initializer_list<double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

double solve_increasing_cubic(double c3, double c1, double r) {
    if (!(c3 > 0.0) || !(c1 > 0.0) || !std::isfinite(c3) || !std::isfinite(c1) || !std::isfinite(r))
        throw std::invalid_argument("increasing cubic needs finite c3 > 0, c1 > 0 and finite r");

    // depressed form x³ + p·x + q = 0 with p > 0: exactly one real root
    const double p = c1 / c3;
    const double q = -r / c3;
    const double p3 = p / 3.0;
    const double s = std::sqrt(q * q / 4.0 + p3 * p3 * p3);
    // pick the sign of the square root that avoids cancellation, recover the partner from u·v = -p/3
    const double t = q / 2.0 + std::copysign(s, q);
    const double u = -std::cbrt(t);
    double x = u == 0.0 ? 0.0 : u - p3 / u;

    const CubicCoeffs poly{c3, 0.0, c1, -r};
    const double tol = 1e-12 * std::max(1.0, std::abs(r));
    x = polish(poly, x, 1);
    if (std::abs(poly(x)) > tol) x = polish(poly, x, 8);
    return x;
}

std::vector<double> real_roots_cubic(const CubicCoeffs& c) {
    const double scale = max_abs({c.c3, c.c2, c.c1, c.c0});
    if (!std::isfinite(scale)) throw std::invalid_argument("cubic coefficients must be finite");
    if (c.c3 == 0.0 || std::abs(c.c3) < 1e-14 * scale)
        throw std::invalid_argument("leading cubic coefficient vanishes; reduce the degree");

    const double a = c.c2 / c.c3;
    const double b = c.c1 / c.c3;
    const double cc = c.c0 / c.c3;
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (a * (2.0 * a * a - 9.0 * b) + 27.0 * cc) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;
    const double shift = a / 3.0;

    std::vector<double> roots;
    roots.reserve(3);
    if (r2 < q3) {
        // three real roots (casus irreducibilis)
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        constexpr double two_pi = 2.0 * std::numbers::pi;
        roots.push_back(m * std::cos(t / 3.0) - shift);
        roots.push_back(m * std::cos((t + two_pi) / 3.0) - shift);
        roots.push_back(m * std::cos((t - two_pi) / 3.0) - shift);
    } else {
        const double big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r2 - q3)), r);
        const double small = big == 0.0 ? 0.0 : q / big;
        roots.push_back(big + small - shift);
        // a repeated pair sits at -(A+B)/2 when A and B coincide
        if (std::abs(big - small) <= 1e-7 * std::max(1.0, std::abs(big)))
            roots.push_back(-0.5 * (big + small) - shift);
    }

    // Newton is only linear near a double root, so allow more steps than the simple case needs
    for (double& x : roots) x = polish(c, x, 60);
    // a near-tangent candidate may sit at a local extremum of p that never touches zero; drop it
    const double tol = 1e-10 * std::max(1.0, scale);
    const auto best = std::min_element(roots.begin(), roots.end(),
                                       [&](double x, double y) { return std::abs(c(x)) < std::abs(c(y)); });
    const double keep_best = *best;
    std::erase_if(roots, [&](double x) { return std::abs(c(x)) > tol; });
    if (roots.empty()) roots.push_back(keep_best);
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double x : roots)
        if (out.empty() || std::abs(x - out.back()) > 1e-9 * std::max(1.0, std::abs(x))) out.push_back(x);
    return out;
}

Vec2 newton_2x2(const ResidualJacobian& eval, Vec2 x, double tol, int max_iter) {
    Vec2 res{};
    Mat2 jac{};
    auto size = [](const Vec2& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };
    eval(x, res, jac);
    if (!std::isfinite(res[0]) || !std::isfinite(res[1]))
        throw IterationError("Newton evaluator not finite at the initial guess", x[0], x[1], size(res));

    for (int it = 0; it < max_iter; ++it) {
        if (size(res) <= tol) return x;
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (det == 0.0 || !std::isfinite(det))
            throw IterationError("singular Jacobian in Newton iteration", x[0], x[1], size(res));
        const Vec2 step{(-res[0] * jac[1][1] + res[1] * jac[0][1]) / det,
                        (-res[1] * jac[0][0] + res[0] * jac[1][0]) / det};

        // backtrack on the max-norm residual
        double damp = 1.0;
        Vec2 trial{};
        Vec2 tres{};
        Mat2 tjac{};
        for (int k = 0; k < 30; ++k) {
            trial = {x[0] + damp * step[0], x[1] + damp * step[1]};
            eval(trial, tres, tjac);
            if (std::isfinite(tres[0]) && std::isfinite(tres[1]) && size(tres) < size(res)) break;
            damp *= 0.5;
        }
        x = trial;
        res = tres;
        jac = tjac;
    }
    if (size(res) <= tol) return x;
    throw IterationError("Newton iteration did not converge", x[0], x[1], size(res));
}

} // namespace prsplit
