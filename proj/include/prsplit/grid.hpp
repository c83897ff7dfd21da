#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace prsplit {

/// Periodic square grid on (-L, L)^2 with n points per dimension.
///
/// Physical layout: row-major n×n, row index i runs along x2 and column index j
/// along x1, with x = -L + index·dx. Coefficient layout follows the real-to-complex
/// transform: n rows × (n/2 + 1) columns, column j holding x1-wavenumber j and row i
/// holding x2-wavenumber i for i < n/2, i - n otherwise. The last column is the
/// Nyquist mode, stored as -n/2.
class GridSpec {
public:
    /// Throws ConfigError unless n is a power of two with n ≥ 4 and half_width > 0.
    static std::shared_ptr<const GridSpec> make(std::size_t n, double half_width);

    std::size_t n() const { return n_; }
    double half_width() const { return half_width_; }
    double dx() const { return dx_; }
    /// Coordinate of grid index `idx` along either axis.
    double coord(std::size_t idx) const { return -half_width_ + static_cast<double>(idx) * dx_; }

    std::size_t points() const { return n_ * n_; }
    std::size_t spectral_cols() const { return n_ / 2 + 1; }
    std::size_t modes() const { return n_ * spectral_cols(); }

    /// Integer wavenumbers of one axis in transform order (0, 1, ..., n/2-1, -n/2, ..., -1).
    std::span<const int> wavenumbers() const { return wavenumbers_; }
    /// Wavenumber pair (k1, k2) of half-spectrum slot (row, col).
    int k1(std::size_t col) const { return col == n_ / 2 ? -static_cast<int>(n_ / 2) : static_cast<int>(col); }
    int k2(std::size_t row) const { return wavenumbers_[row]; }

    /// Laplacian symbol -(k1² + k2²)(π/L)² per half-spectrum slot.
    std::span<const double> laplacian_symbol() const { return laplacian_; }
    double laplacian(std::size_t row, std::size_t col) const { return laplacian_[row * spectral_cols() + col]; }

    /// Number of times the slot appears in the full Hermitian spectrum (1 or 2).
    std::span<const double> multiplicity() const { return multiplicity_; }

    bool same_as(const GridSpec& other) const { return n_ == other.n_ && half_width_ == other.half_width_; }

private:
    GridSpec(std::size_t n, double half_width);

    std::size_t n_;
    double half_width_;
    double dx_;
    std::vector<int> wavenumbers_;
    std::vector<double> laplacian_;
    std::vector<double> multiplicity_;
};

using GridPtr = std::shared_ptr<const GridSpec>;
using Field = std::vector<double>;
using Spectrum = std::vector<std::complex<double>>;

/// Two-component real field on a shared grid.
struct State {
    GridPtr grid;
    Field first;
    Field second;

    State() = default;
    explicit State(GridPtr g);
    State(GridPtr g, Field a, Field b);

    Field& operator[](std::size_t c) { return c == 0 ? first : second; }
    const Field& operator[](std::size_t c) const { return c == 0 ? first : second; }

    bool all_finite() const;
};

void require_same_grid(const State& a, const State& b);

/// Forward transform, normalised so that inverse(forward(u)) == u.
Spectrum forward(const GridSpec& grid, std::span<const double> field);
/// Inverse transform onto a real field; Hermitian symmetry is imposed by the c2r transform.
Field inverse(const GridSpec& grid, const Spectrum& coeffs);

/// Pointwise helpers on states.
State axpy(double a, const State& x, const State& y); // a·x + y
State difference(const State& a, const State& b);
double grid_mean(std::span<const double> field);

/// Samples f(x1, x2) at every grid point.
template <typename Fn>
Field sample(const GridSpec& grid, Fn&& f) {
    Field out(grid.points());
    const std::size_t n = grid.n();
    for (std::size_t i = 0; i < n; ++i) {
        const double x2 = grid.coord(i);
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = f(grid.coord(j), x2);
    }
    return out;
}

} // namespace prsplit
