#pragma once

#include "prsplit/grid.hpp"

#include <string>

namespace prsplit {

/// Which inner product measures a state.
///
/// L2: sum of componentwise L² products.
/// WeightedCaginalp: (ψ1, ψ2) + ℓ²(φ1, φ2).
/// GraphGrayScott: (Au, Av) + (u, v) with A = diag(d1, d2)Δ, evaluated in coefficient space.
///
/// Physical-space products carry the quadrature weight dx² so values approximate
/// continuum integrals over the domain.
struct NormKind {
    enum class Tag { L2, WeightedCaginalp, GraphGrayScott };

    Tag tag = Tag::L2;
    double ell = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static NormKind l2() { return {}; }
    static NormKind weighted_caginalp(double ell);
    static NormKind graph_gray_scott(double d1, double d2);

    std::string name() const;
};

double inner(const NormKind& kind, const State& u, const State& v);
double norm(const NormKind& kind, const State& u);
double error_norm(const NormKind& kind, const State& u, const State& v);

} // namespace prsplit
