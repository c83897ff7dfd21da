#pragma once

#include "prsplit/harness/config.hpp"
#include "prsplit/integrators.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace prsplit::harness {

struct ProblemSetup {
    std::unique_ptr<SplitProblem> problem;
    State initial;
};

/// Problem and its standard initial data for the configured model on an n×n grid over (-π, π)².
ProblemSetup make_problem(const RunSpec& spec, std::size_t n);

struct ConvergenceRow {
    double h = 0.0;
    std::size_t n_steps = 0;
    double error = 0.0;
    double wall_seconds = 0.0;
};

struct ConvergenceReport {
    std::string model;
    std::string scheme;
    std::string norm;
    std::size_t n = 0;
    double t_final = 0.0;
    std::size_t ref_steps = 0;
    std::size_t ref_n = 0;
    double ref_wall_seconds = 0.0;
    std::vector<ConvergenceRow> rows; // h strictly decreasing
    std::vector<double> orders;       // rows.size() - 1 pairwise slopes

    /// Order of the scheme the guide line is drawn with: 2 for PR, 1 for Lie.
    double expected_order() const { return scheme == "lie" ? 1.0 : 2.0; }
};

/// `h,n_steps,error,observed_order`, empty order on the first row, %.17g formatting.
std::string report_csv(const ConvergenceReport& report);

/// Errors at t_final of each study step size against a reference computed by the same
/// scheme with ref_steps steps. The reference uses the study grid, or a grid twice as fine
/// (injected back onto the study grid) in long mode. Writes convergence.csv and
/// convergence.svg into spec.out when `write_artifacts` is set.
ConvergenceReport run_convergence_study(const RunSpec& spec, std::ostream& log, bool write_artifacts = true);

struct SimulationResult {
    State final_state;
    std::vector<std::filesystem::path> files;
    double mean_drift = 0.0; // relative drift of mean(ψ); Caginalp only
};

/// Integrates spec.n_steps steps, writing snapshot_<step>.bin and snapshot_<step>.csv for
/// every requested step. Caginalp snapshots hold (θ, φ), Gray–Scott (u1, u2).
SimulationResult run_simulation(const RunSpec& spec, std::ostream& log);

/// Strict 8-neighbour local maxima above `threshold`, periodic wrap.
std::size_t count_local_maxima(const GridSpec& grid, const Field& field, double threshold);

/// Restricts a field on a 2n grid to the n grid sharing every other node.
Field inject_coarse(const GridSpec& fine, const Field& field);

} // namespace prsplit::harness
