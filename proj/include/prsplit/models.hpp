#pragma once

#include "prsplit/cubic.hpp"
#include "prsplit/grid.hpp"
#include "prsplit/linear_symbol.hpp"
#include "prsplit/norms.hpp"

#include <memory>
#include <string>

namespace prsplit {

/// Semilinear problem u' = (A + F)u split into a linear part A (given by its symbol)
/// and a pointwise nonlinearity F.
class SplitProblem {
public:
    virtual ~SplitProblem() = default;

    virtual std::string name() const = 0;
    virtual const LinearSymbol& symbol() const = 0;
    const GridPtr& grid() const { return symbol().grid(); }

    virtual State apply_F(const State& u) const = 0;
    /// Solves (I - τF)v = w; τ = 0 returns w.
    virtual State nonlinear_resolvent(double tau, const State& w) const = 0;

    /// Norm the model's theory is posed in.
    virtual NormKind norm_kind() const = 0;
    /// Dissipativity constants M[A] and M[F] in that norm.
    virtual double dissipativity_A() const { return 0.0; }
    virtual double dissipativity_F() const = 0;
};

// Caginalp solidification model, stored in the variables u = (ψ, φ), ψ = θ + ℓφ.

struct CaginalpParams {
    double ell = 0.5;

    /// max{3/2 - ℓ, ℓ²}
    double dissipativity() const;
    void validate() const;
};

/// (0, (1-ℓ)φ - φ³ + ψ)
State caginalp_apply_F(const State& u, const CaginalpParams& p);
/// ψ passes through; φ solves τφ³ + (1 - τ(1-ℓ))φ = w_φ + τw_ψ pointwise.
/// Throws StepSizeError unless τ(1-ℓ) < 1.
State caginalp_nonlinear_resolvent(double tau, const State& w, const CaginalpParams& p);
/// θ0 = 1, φ0 = exp(-20(x1² + x2²/6)) + exp(-20(x1²/6 + x2²)) - 1, returned as (θ0 + ℓφ0, φ0).
State caginalp_initial(const GridPtr& grid, const CaginalpParams& p);
/// θ = ψ - ℓφ
Field caginalp_extract_theta(const State& u, const CaginalpParams& p);

class CaginalpProblem final : public SplitProblem {
public:
    CaginalpProblem(GridPtr grid, CaginalpParams params);

    std::string name() const override { return "caginalp"; }
    const LinearSymbol& symbol() const override { return symbol_; }
    State apply_F(const State& u) const override { return caginalp_apply_F(u, params_); }
    State nonlinear_resolvent(double tau, const State& w) const override {
        return caginalp_nonlinear_resolvent(tau, w, params_);
    }
    NormKind norm_kind() const override { return NormKind::weighted_caginalp(params_.ell); }
    double dissipativity_F() const override { return params_.dissipativity(); }
    const CaginalpParams& params() const { return params_; }

private:
    CaginalpParams params_;
    LinearSymbol symbol_;
};

// Gray–Scott model.

struct GrayScottParams {
    double d1 = 8e-4;
    double d2 = 4e-4;
    double ell1 = 0.024;
    double ell2 = 0.084;

    void validate() const;
};

/// (-u1·u2² + ℓ1(1 - u1), u1·u2² - ℓ2·u2)
State grayscott_apply_F(const State& u, const GrayScottParams& p);

/// Pointwise resolvent (I - τF)^{-1} at one point. The second unknown solves
///   τ(1+τℓ2)v2³ - τ(w1+w2+τℓ1)v2² + (1+τℓ1)(1+τℓ2)v2 - (1+τℓ1)w2 = 0,
/// the real root nearest w2 is taken and v1 = (w1 + τℓ1)/(1 + τℓ1 + τv2²). If the
/// full residual exceeds 1e-10 a damped Newton solve from (w1, w2) takes over.
/// Throws IterationError when both paths fail.
Vec2 grayscott_resolve_point(double tau, double w1, double w2, const GrayScottParams& p);
/// Max-norm residual of (I - τF)v - w at one point.
double grayscott_point_residual(double tau, const Vec2& v, double w1, double w2, const GrayScottParams& p);

/// Throws StepFailure naming the first failing grid point.
State grayscott_nonlinear_resolvent(double tau, const State& w, const GrayScottParams& p);

/// Four bumps g(x) = exp(-ε²/(ε² - |x-y|²)) with ε = π/10 centred at (±π/10, ±π/10),
/// scaled by e/4, form u2; u1 = 1 - 2u2.
State grayscott_initial(const GridPtr& grid);
/// Initial u2 at one point.
double grayscott_initial_u2(double x1, double x2);

/// M[F] is taken as 0 for Gray–Scott: no global dissipativity constant exists for the
/// untruncated nonlinearity, so stability guards are advisory for this model.
class GrayScottProblem final : public SplitProblem {
public:
    GrayScottProblem(GridPtr grid, GrayScottParams params);

    std::string name() const override { return "gray-scott"; }
    const LinearSymbol& symbol() const override { return symbol_; }
    State apply_F(const State& u) const override { return grayscott_apply_F(u, params_); }
    State nonlinear_resolvent(double tau, const State& w) const override {
        return grayscott_nonlinear_resolvent(tau, w, params_);
    }
    NormKind norm_kind() const override { return NormKind::graph_gray_scott(params_.d1, params_.d2); }
    double dissipativity_F() const override { return 0.0; }
    const GrayScottParams& params() const { return params_; }

private:
    GrayScottParams params_;
    LinearSymbol symbol_;
};

/// (Fu - Fv, u - v) - M[F]·‖u - v‖², both in the problem's norm. Nonpositive whenever
/// M[F] is a valid dissipativity constant.
double dissipativity_gap(const SplitProblem& problem, const State& u, const State& v);

} // namespace prsplit
