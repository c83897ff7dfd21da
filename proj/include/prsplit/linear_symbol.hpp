#pragma once

#include "prsplit/grid.hpp"

namespace prsplit {

/// Coefficient matrix C of the linear operator A = C·Δ acting on a two-component state.
/// Both model operators are upper triangular: C = [[a, b], [0, d]].
struct CouplingMatrix {
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
};

/// Per-mode symbol G_k = λ_k·C of a linear operator on the periodic grid.
///
/// Invertibility of I - τG_k for τ ≥ 0 requires a, d ≥ 0 (λ_k ≤ 0); the constructor
/// rejects negative diagonal entries.
class LinearSymbol {
public:
    LinearSymbol(GridPtr grid, CouplingMatrix coeffs);

    /// λ·[[1, -ℓ], [0, 1]]; θ is eliminated through ψ = θ + ℓφ.
    static LinearSymbol caginalp(GridPtr grid, double ell);
    /// λ·diag(d1, d2).
    static LinearSymbol diffusion(GridPtr grid, double d1, double d2);
    static LinearSymbol zero(GridPtr grid) { return LinearSymbol(std::move(grid), {}); }

    const GridPtr& grid() const { return grid_; }
    const CouplingMatrix& coeffs() const { return coeffs_; }

private:
    GridPtr grid_;
    CouplingMatrix coeffs_;
};

/// Au, evaluated as inverse(G_k·û_k).
State apply_linear(const LinearSymbol& sym, const State& u);

/// Solves (I - τA)v = w mode by mode with the closed-form triangular inverse.
State linear_resolvent(const LinearSymbol& sym, double tau, const State& w);

/// Cayley map (I + τA)(I - τA)^{-1} w, evaluated as w + 2τ·G_k·(I - τG_k)^{-1}ŵ_k so that
/// A never acts on unresolved data.
State linear_cayley(const LinearSymbol& sym, double tau, const State& w);

} // namespace prsplit
