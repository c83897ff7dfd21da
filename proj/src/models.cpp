#include "prsplit/models.hpp"

#include "prsplit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace prsplit {

double CaginalpParams::dissipativity() const { return std::max(1.5 - ell, ell * ell); }

void CaginalpParams::validate() const {
    if (!(ell > 0.0) || !std::isfinite(ell)) throw ConfigError("Caginalp coupling ell must be positive");
}

State caginalp_apply_F(const State& u, const CaginalpParams& p) {
    State out(u.grid);
    const double lin = 1.0 - p.ell;
    for (std::size_t k = 0; k < u.first.size(); ++k) {
        const double phi = u.second[k];
        out.second[k] = lin * phi - phi * phi * phi + u.first[k];
    }
    return out;
}

State caginalp_nonlinear_resolvent(double tau, const State& w, const CaginalpParams& p) {
    if (!(tau >= 0.0)) throw StepSizeError("nonlinear resolvent step must be nonnegative");
    if (tau == 0.0) return w;
    const double c1 = 1.0 - tau * (1.0 - p.ell);
    if (!(c1 > 0.0)) {
        std::ostringstream msg;
        msg << "Caginalp resolvent needs tau*(1-ell) < 1, got tau=" << tau << " ell=" << p.ell;
        throw StepSizeError(msg.str());
    }
    State out(w.grid);
    out.first = w.first;
    for (std::size_t k = 0; k < w.first.size(); ++k)
        out.second[k] = solve_increasing_cubic(tau, c1, w.second[k] + tau * w.first[k]);
    return out;
}

State caginalp_initial(const GridPtr& grid, const CaginalpParams& p) {
    Field phi = sample(*grid, [](double x1, double x2) {
        return std::exp(-20.0 * (x1 * x1 + x2 * x2 / 6.0)) + std::exp(-20.0 * (x1 * x1 / 6.0 + x2 * x2)) - 1.0;
    });
    Field psi(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) psi[k] = 1.0 + p.ell * phi[k];
    return State(grid, std::move(psi), std::move(phi));
}

Field caginalp_extract_theta(const State& u, const CaginalpParams& p) {
    Field theta(u.first.size());
    for (std::size_t k = 0; k < theta.size(); ++k) theta[k] = u.first[k] - p.ell * u.second[k];
    return theta;
}

CaginalpProblem::CaginalpProblem(GridPtr grid, CaginalpParams params)
    : params_(params), symbol_(LinearSymbol::caginalp(std::move(grid), params.ell)) {
    params_.validate();
}

void GrayScottParams::validate() const {
    for (double v : {d1, d2, ell1, ell2})
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("Gray-Scott parameters must all be positive");
}

State grayscott_apply_F(const State& u, const GrayScottParams& p) {
    State out(u.grid);
    for (std::size_t k = 0; k < u.first.size(); ++k) {
        const double a = u.first[k];
        const double b = u.second[k];
        const double r = a * b * b;
        out.first[k] = -r + p.ell1 * (1.0 - a);
        out.second[k] = r - p.ell2 * b;
    }
    return out;
}

double grayscott_point_residual(double tau, const Vec2& v, double w1, double w2, const GrayScottParams& p) {
    const double r = v[0] * v[1] * v[1];
    const double e1 = v[0] - tau * (-r + p.ell1 * (1.0 - v[0])) - w1;
    const double e2 = v[1] - tau * (r - p.ell2 * v[1]) - w2;
    return std::max(std::abs(e1), std::abs(e2));
}

Vec2 grayscott_resolve_point(double tau, double w1, double w2, const GrayScottParams& p) {
    if (tau == 0.0) return {w1, w2};
    const double tol = 1e-10 * std::max({1.0, std::abs(w1), std::abs(w2)});
    const double g1 = 1.0 + tau * p.ell1;
    const double g2 = 1.0 + tau * p.ell2;

    const CubicCoeffs cubic{tau * g2, -tau * (w1 + w2 + tau * p.ell1), g1 * g2, -g1 * w2};
    const auto roots = real_roots_cubic(cubic);
    const double v2 = *std::min_element(roots.begin(), roots.end(), [w2](double a, double b) {
        return std::abs(a - w2) < std::abs(b - w2);
    });
    const Vec2 v{(w1 + tau * p.ell1) / (g1 + tau * v2 * v2), v2};
    if (grayscott_point_residual(tau, v, w1, w2, p) <= tol) return v;

    return newton_2x2(
        [&](const Vec2& x, Vec2& res, Mat2& jac) {
            const double a = x[0];
            const double b = x[1];
            res[0] = a - tau * (-a * b * b + p.ell1 * (1.0 - a)) - w1;
            res[1] = b - tau * (a * b * b - p.ell2 * b) - w2;
            jac[0][0] = 1.0 + tau * (b * b + p.ell1);
            jac[0][1] = 2.0 * tau * a * b;
            jac[1][0] = -tau * b * b;
            jac[1][1] = 1.0 - 2.0 * tau * a * b + tau * p.ell2;
        },
        {w1, w2}, tol, 50);
}

State grayscott_nonlinear_resolvent(double tau, const State& w, const GrayScottParams& p) {
    if (!(tau >= 0.0)) throw StepSizeError("nonlinear resolvent step must be nonnegative");
    if (tau == 0.0) return w;
    State out(w.grid);
    const std::size_t n = w.grid->n();
    for (std::size_t k = 0; k < w.first.size(); ++k) {
        try {
            const Vec2 v = grayscott_resolve_point(tau, w.first[k], w.second[k], p);
            out.first[k] = v[0];
            out.second[k] = v[1];
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "Gray-Scott resolvent failed at grid point (" << k / n << ", " << k % n << "): " << e.what();
            throw StepFailure(msg.str(), k / n, k % n);
        }
    }
    return out;
}

double grayscott_initial_u2(double x1, double x2) {
    constexpr double eps = std::numbers::pi / 10.0;
    constexpr double eps2 = eps * eps;
    double s = 0.0;
    for (double c1 : {-eps, eps}) {
        for (double c2 : {-eps, eps}) {
            const double r2 = (x1 - c1) * (x1 - c1) + (x2 - c2) * (x2 - c2);
            // the support boundary evaluates to its left limit, 0
            if (r2 < eps2) s += std::exp(-eps2 / (eps2 - r2));
        }
    }
    return std::exp(1.0) / 4.0 * s;
}

State grayscott_initial(const GridPtr& grid) {
    Field u2 = sample(*grid, grayscott_initial_u2);
    Field u1(u2.size());
    for (std::size_t k = 0; k < u2.size(); ++k) u1[k] = 1.0 - 2.0 * u2[k];
    return State(grid, std::move(u1), std::move(u2));
}

GrayScottProblem::GrayScottProblem(GridPtr grid, GrayScottParams params)
    : params_(params), symbol_(LinearSymbol::diffusion(std::move(grid), params.d1, params.d2)) {
    params_.validate();
}

double dissipativity_gap(const SplitProblem& problem, const State& u, const State& v) {
    const NormKind kind = problem.norm_kind();
    const State du = difference(u, v);
    const State dF = difference(problem.apply_F(u), problem.apply_F(v));
    return inner(kind, dF, du) - problem.dissipativity_F() * inner(kind, du, du);
}

} // namespace prsplit
