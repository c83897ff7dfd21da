#include "prsplit/norms.hpp"

#include "prsplit/errors.hpp"

#include <cmath>

namespace prsplit {

namespace {

double l2_product(const GridSpec& grid, const Field& a, const Field& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s * grid.dx() * grid.dx();
}

// Σ_k m_k (1 + d²λ_k²) Re(â_k conj(b̂_k)) scaled by the domain area (Parseval with
// normalised coefficients).
double graph_product(const GridSpec& grid, const Field& a, const Field& b, double diff) {
    const Spectrum sa = forward(grid, a);
    const Spectrum sb = forward(grid, b);
    const auto lambda = grid.laplacian_symbol();
    const auto mult = grid.multiplicity();
    double s = 0.0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        const double dl = diff * lambda[k];
        s += mult[k] * (1.0 + dl * dl) * (sa[k].real() * sb[k].real() + sa[k].imag() * sb[k].imag());
    }
    const double side = 2.0 * grid.half_width();
    return s * side * side;
}

} // namespace

NormKind NormKind::weighted_caginalp(double ell) {
    if (!(ell > 0.0)) throw ConfigError("weighted norm requires ell > 0");
    return {Tag::WeightedCaginalp, ell, 0.0, 0.0};
}

NormKind NormKind::graph_gray_scott(double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw ConfigError("graph norm requires positive diffusivities");
    return {Tag::GraphGrayScott, 0.0, d1, d2};
}

std::string NormKind::name() const {
    switch (tag) {
    case Tag::L2: return "l2";
    case Tag::WeightedCaginalp: return "weighted";
    case Tag::GraphGrayScott: return "graph";
    }
    return "?";
}

double inner(const NormKind& kind, const State& u, const State& v) {
    require_same_grid(u, v);
    const GridSpec& g = *u.grid;
    switch (kind.tag) {
    case NormKind::Tag::L2:
        return l2_product(g, u.first, v.first) + l2_product(g, u.second, v.second);
    case NormKind::Tag::WeightedCaginalp:
        return l2_product(g, u.first, v.first) + kind.ell * kind.ell * l2_product(g, u.second, v.second);
    case NormKind::Tag::GraphGrayScott:
        return graph_product(g, u.first, v.first, kind.d1) + graph_product(g, u.second, v.second, kind.d2);
    }
    return 0.0;
}

double norm(const NormKind& kind, const State& u) {
    const double sq = inner(kind, u, u);
    if (sq < 0.0) {
        // roundoff can push an exact zero slightly negative
        const double scale = inner(NormKind::l2(), u, u);
        if (sq < -1e-12 * (1.0 + scale)) throw DegenerateMeasurement("negative squared norm");
        return 0.0;
    }
    return std::sqrt(sq);
}

double error_norm(const NormKind& kind, const State& u, const State& v) {
    return norm(kind, difference(u, v));
}

} // namespace prsplit
