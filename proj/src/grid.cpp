#include "prsplit/grid.hpp"

#include "prsplit/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace prsplit {

namespace {

// fftw planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;

    explicit Plans(std::size_t n) {
        const int ni = static_cast<int>(n);
        std::vector<double> real(n * n);
        std::vector<std::complex<double>> cplx(n * (n / 2 + 1));
        auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
        std::lock_guard lock(planner_mutex());
        r2c = fftw_plan_dft_r2c_2d(ni, ni, real.data(), c, FFTW_ESTIMATE | FFTW_UNALIGNED);
        c2r = fftw_plan_dft_c2r_2d(ni, ni, c, real.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    Plans(const Plans&) = delete;
    Plans& operator=(const Plans&) = delete;
    ~Plans() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(r2c);
        fftw_destroy_plan(c2r);
    }
};

const Plans& plans_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<Plans>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Plans>(n);
    return *slot;
}

} // namespace

GridSpec::GridSpec(std::size_t n, double half_width)
    : n_(n), half_width_(half_width), dx_(2.0 * half_width / static_cast<double>(n)) {
    wavenumbers_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        wavenumbers_[i] = i < n / 2 ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(n);

    const double scale = std::numbers::pi / half_width;
    const std::size_t cols = spectral_cols();
    laplacian_.resize(n * cols);
    multiplicity_.resize(n * cols);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double kx = k1(j) * scale;
            const double ky = k2(i) * scale;
            laplacian_[i * cols + j] = -(kx * kx + ky * ky);
            multiplicity_[i * cols + j] = (j == 0 || j == n / 2) ? 1.0 : 2.0;
        }
    }
    // exact zero for the mean mode regardless of scale
    laplacian_[0] = 0.0;
}

std::shared_ptr<const GridSpec> GridSpec::make(std::size_t n, double half_width) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw ConfigError("grid size must be a power of two and at least 4, got " + std::to_string(n));
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw ConfigError("domain half width must be positive and finite");
    return std::shared_ptr<const GridSpec>(new GridSpec(n, half_width));
}

State::State(GridPtr g) : grid(std::move(g)) {
    first.assign(grid->points(), 0.0);
    second.assign(grid->points(), 0.0);
}

State::State(GridPtr g, Field a, Field b) : grid(std::move(g)), first(std::move(a)), second(std::move(b)) {
    if (first.size() != grid->points() || second.size() != grid->points())
        throw std::invalid_argument("field size does not match grid");
}

bool State::all_finite() const {
    auto finite = [](double v) { return std::isfinite(v); };
    return std::all_of(first.begin(), first.end(), finite) && std::all_of(second.begin(), second.end(), finite);
}

void require_same_grid(const State& a, const State& b) {
    if (!a.grid || !b.grid || !a.grid->same_as(*b.grid)) throw GridMismatch();
}

Spectrum forward(const GridSpec& grid, std::span<const double> field) {
    if (field.size() != grid.points()) throw std::invalid_argument("field size does not match grid");
    const auto& p = plans_for(grid.n());
    // r2c with FFTW_UNALIGNED leaves its input untouched but takes a non-const pointer
    Field in(field.begin(), field.end());
    Spectrum out(grid.modes());
    fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    const double scale = 1.0 / static_cast<double>(grid.points());
    for (auto& c : out) c *= scale;
    return out;
}

Field inverse(const GridSpec& grid, const Spectrum& coeffs) {
    if (coeffs.size() != grid.modes()) throw std::invalid_argument("spectrum size does not match grid");
    const auto& p = plans_for(grid.n());
    Spectrum scratch = coeffs; // c2r overwrites its input
    Field out(grid.points());
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
    return out;
}

State axpy(double a, const State& x, const State& y) {
    require_same_grid(x, y);
    State out(y);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t k = 0; k < out[c].size(); ++k) out[c][k] += a * x[c][k];
    return out;
}

State difference(const State& a, const State& b) { return axpy(-1.0, b, a); }

double grid_mean(std::span<const double> field) {
    double s = 0.0;
    for (double v : field) s += v;
    return s / static_cast<double>(field.size());
}

} // namespace prsplit
