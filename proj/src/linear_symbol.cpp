#include "prsplit/linear_symbol.hpp"

#include "prsplit/errors.hpp"

#include <stdexcept>

namespace prsplit {

namespace {

void check_grid(const LinearSymbol& sym, const State& u) {
    if (!u.grid || !sym.grid()->same_as(*u.grid)) throw GridMismatch();
}

void check_tau(double tau) {
    if (!(tau >= 0.0)) throw std::invalid_argument("resolvent step must be nonnegative");
}

// Transforms both components, applies `per_mode(lambda, c0, c1)` in place and transforms back.
template <typename PerMode>
State map_modes(const LinearSymbol& sym, const State& u, PerMode&& per_mode) {
    const GridSpec& grid = *sym.grid();
    Spectrum s0 = forward(grid, u.first);
    Spectrum s1 = forward(grid, u.second);
    const auto lambda = grid.laplacian_symbol();
    for (std::size_t k = 0; k < s0.size(); ++k) per_mode(lambda[k], s0[k], s1[k]);
    return State(u.grid, inverse(grid, s0), inverse(grid, s1));
}

} // namespace

LinearSymbol::LinearSymbol(GridPtr grid, CouplingMatrix coeffs) : grid_(std::move(grid)), coeffs_(coeffs) {
    if (!grid_) throw std::invalid_argument("linear symbol needs a grid");
    if (coeffs_.a < 0.0 || coeffs_.d < 0.0)
        throw ConfigError("diagonal coefficients of the linear operator must be nonnegative");
}

LinearSymbol LinearSymbol::caginalp(GridPtr grid, double ell) {
    return LinearSymbol(std::move(grid), {1.0, -ell, 1.0});
}

LinearSymbol LinearSymbol::diffusion(GridPtr grid, double d1, double d2) {
    return LinearSymbol(std::move(grid), {d1, 0.0, d2});
}

State apply_linear(const LinearSymbol& sym, const State& u) {
    check_grid(sym, u);
    const auto [a, b, d] = sym.coeffs();
    return map_modes(sym, u, [=](double lam, std::complex<double>& x, std::complex<double>& y) {
        const auto nx = lam * (a * x + b * y);
        y = lam * d * y;
        x = nx;
    });
}

State linear_resolvent(const LinearSymbol& sym, double tau, const State& w) {
    check_grid(sym, w);
    check_tau(tau);
    const auto [a, b, d] = sym.coeffs();
    return map_modes(sym, w, [=](double lam, std::complex<double>& x, std::complex<double>& y) {
        const double pa = 1.0 / (1.0 - tau * lam * a);
        const double pd = 1.0 / (1.0 - tau * lam * d);
        x = pa * x + tau * lam * b * pa * pd * y;
        y = pd * y;
    });
}

State linear_cayley(const LinearSymbol& sym, double tau, const State& w) {
    check_grid(sym, w);
    check_tau(tau);
    const auto [a, b, d] = sym.coeffs();
    return map_modes(sym, w, [=](double lam, std::complex<double>& x, std::complex<double>& y) {
        const double pa = 1.0 / (1.0 - tau * lam * a);
        const double pd = 1.0 / (1.0 - tau * lam * d);
        const auto rx = pa * x + tau * lam * b * pa * pd * y;
        const auto ry = pd * y;
        const double s = 2.0 * tau * lam;
        x += s * (a * rx + b * ry);
        y += s * d * ry;
    });
}

} // namespace prsplit
