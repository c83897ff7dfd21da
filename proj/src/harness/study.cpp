#include "prsplit/harness/study.hpp"

#include "prsplit/errors.hpp"
#include "prsplit/harness/snapshot.hpp"
#include "prsplit/harness/svg_plot.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace prsplit::harness {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

WarningSink log_warnings(std::ostream& log) {
    return [&log](const std::string& msg) { log << "warning: " << msg << "\n"; };
}

State integrate_to_end(const RunSpec& spec, std::size_t n, std::size_t steps, std::ostream& log) {
    auto setup = make_problem(spec, n);
    const StepperConfig cfg{spec.scheme, spec.t_final / static_cast<double>(steps), steps, spec.enforce_stability};
    return integrate(*setup.problem, cfg, setup.initial, {}, {}, log_warnings(log)).final_state;
}

} // namespace

ProblemSetup make_problem(const RunSpec& spec, std::size_t n) {
    auto grid = GridSpec::make(n, std::numbers::pi);
    ProblemSetup setup;
    if (spec.model == ModelKind::Caginalp) {
        setup.problem = std::make_unique<CaginalpProblem>(grid, spec.caginalp);
        setup.initial = caginalp_initial(grid, spec.caginalp);
    } else {
        setup.problem = std::make_unique<GrayScottProblem>(grid, spec.gray_scott);
        setup.initial = grayscott_initial(grid);
    }
    return setup;
}

Field inject_coarse(const GridSpec& fine, const Field& field) {
    const std::size_t nf = fine.n();
    const std::size_t nc = nf / 2;
    Field out(nc * nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) out[i * nc + j] = field[(2 * i) * nf + 2 * j];
    return out;
}

std::string report_csv(const ConvergenceReport& report) {
    std::string out = "h,n_steps,error,observed_order\n";
    char buf[128];
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,", r.h, r.n_steps, r.error);
        out += buf;
        if (i > 0) {
            std::snprintf(buf, sizeof buf, "%.17g", report.orders[i - 1]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

ConvergenceReport run_convergence_study(const RunSpec& spec, std::ostream& log, bool write_artifacts) {
    ConvergenceReport report;
    report.model = model_name(spec.model);
    report.scheme = scheme_name(spec.scheme);
    report.norm = spec.norm.name();
    report.n = spec.n;
    report.t_final = spec.t_final;
    report.ref_steps = spec.ref_steps;
    report.ref_n = spec.long_mode ? 2 * spec.n : spec.n;

    auto t0 = std::chrono::steady_clock::now();
    State reference = integrate_to_end(spec, report.ref_n, spec.ref_steps, log);
    if (spec.long_mode) {
        const auto grid = GridSpec::make(spec.n, std::numbers::pi);
        reference = State(grid, inject_coarse(*reference.grid, reference.first),
                          inject_coarse(*reference.grid, reference.second));
    }
    report.ref_wall_seconds = seconds_since(t0);
    log << "reference: " << report.scheme << ", n=" << report.ref_n << ", " << spec.ref_steps << " steps, "
        << report.ref_wall_seconds << " s\n";

    std::vector<double> hs, errors;
    for (double h : spec.h_list) {
        const auto steps = static_cast<std::size_t>(std::llround(spec.t_final / h));
        t0 = std::chrono::steady_clock::now();
        const State u = integrate_to_end(spec, spec.n, steps, log);
        ConvergenceRow row{h, steps, error_norm(spec.norm, u, reference), seconds_since(t0)};
        log << "h=" << row.h << " n_steps=" << row.n_steps << " error=" << row.error << " (" << row.wall_seconds
            << " s)\n";
        report.rows.push_back(row);
        hs.push_back(h);
        errors.push_back(row.error);
    }
    report.orders = observed_orders(hs, errors);
    for (std::size_t i = 0; i < report.orders.size(); ++i)
        log << "order h=" << hs[i] << " -> " << hs[i + 1] << ": " << report.orders[i] << "\n";

    if (write_artifacts) {
        write_file_atomic(spec.out / "convergence.csv", report_csv(report));
        emit_loglog_svg(report, spec.out / "convergence.svg");
    }
    return report;
}

SimulationResult run_simulation(const RunSpec& spec, std::ostream& log) {
    auto setup = make_problem(spec, spec.n);
    const GridSpec& grid = *setup.problem->grid();
    const StepperConfig cfg{spec.scheme, spec.h(), spec.n_steps, spec.enforce_stability};
    const bool caginalp = spec.model == ModelKind::Caginalp;
    const std::vector<std::string> names = caginalp ? std::vector<std::string>{"theta", "phi"}
                                                    : std::vector<std::string>{"u1", "u2"};

    SimulationResult result;
    auto write = [&](std::size_t step, double time, const State& s) {
        Field first = caginalp ? caginalp_extract_theta(s, spec.caginalp) : s.first;
        Snapshot snap{grid.n(), time, {first, s.second}};
        const auto stem = spec.out / ("snapshot_" + std::to_string(step));
        auto bin = stem;
        bin += ".bin";
        auto csv = stem;
        csv += ".csv";
        write_file_atomic(bin, encode_snapshot(snap));
        write_file_atomic(csv, contour_csv(grid, names, {&first, &s.second}));
        result.files.push_back(bin);
        result.files.push_back(csv);
        log << "snapshot step " << step << " t=" << time << " -> " << bin.string() << "\n";
    };

    const auto t0 = std::chrono::steady_clock::now();
    auto out = integrate(*setup.problem, cfg, setup.initial, spec.snapshot_steps, write, log_warnings(log));
    result.final_state = std::move(out.final_state);
    log << model_name(spec.model) << " " << scheme_name(spec.scheme) << ": " << spec.n_steps << " steps in "
        << seconds_since(t0) << " s\n";

    if (caginalp) {
        const double m0 = grid_mean(setup.initial.first);
        const double m1 = grid_mean(result.final_state.first);
        result.mean_drift = std::abs(m1 - m0) / std::abs(m0);
        log << "mean(psi) drift: " << result.mean_drift << " (relative)\n";
    } else {
        log << "u2 local maxima above 0.1: " << count_local_maxima(grid, result.final_state.second, 0.1) << "\n";
    }
    return result;
}

std::size_t count_local_maxima(const GridSpec& grid, const Field& field, double threshold) {
    const std::size_t n = grid.n();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = field[i * n + j];
            if (!(v > threshold)) continue;
            bool strict = true;
            for (int di = -1; di <= 1 && strict; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const std::size_t ii = (i + n + di) % n;
                    const std::size_t jj = (j + n + dj) % n;
                    if (!(field[ii * n + jj] < v)) {
                        strict = false;
                        break;
                    }
                }
            if (strict) ++count;
        }
    }
    return count;
}

} // namespace prsplit::harness
