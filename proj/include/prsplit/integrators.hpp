#pragma once

#include "prsplit/models.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace prsplit {

enum class Scheme { PeacemanRachford, Lie };

std::string scheme_name(Scheme s);

/// Peaceman–Rachford step (I - τF)^{-1}(I + τA)(I - τA)^{-1}(I + τF), τ = h/2.
State pr_step(const SplitProblem& problem, double h, const State& u);

/// Lie step (I - hF)^{-1}(I - hA)^{-1}.
State lie_step(const SplitProblem& problem, double h, const State& u);

/// Auxiliary step (I + τA)(I - τA)^{-1}(I + τF)(I - τF)^{-1}. Conjugate to the PR step:
/// pr_step ∘ φ = φ ∘ aux_pr_step with φ = (I - τF)^{-1}.
State aux_pr_step(const SplitProblem& problem, double h, const State& u);

struct StepperConfig {
    Scheme scheme = Scheme::PeacemanRachford;
    double h = 0.0;
    std::size_t n_steps = 0;
    bool enforce_stability = false;
};

/// Largest admissible h·max{M[A], M[F]}: 1 for PR, 1/2 for Lie.
double stability_limit(Scheme s);
/// True when the configuration satisfies the scheme's step-size hypothesis.
bool stability_satisfied(const SplitProblem& problem, Scheme s, double h);

/// Called with (step index, time, state) after each requested step.
using SnapshotHook = std::function<void(std::size_t, double, const State&)>;
/// Receives human-readable warnings (stability guard).
using WarningSink = std::function<void(const std::string&)>;

struct IntegrationResult {
    State final_state;
    std::vector<std::pair<std::size_t, State>> snapshots;
};

/// Applies the configured step n_steps times, recording snapshots at the requested step
/// indices (index 0 is the initial state) and invoking `hook` for each. Throws
/// StabilityViolation when enforcement is on and the step-size bound fails (otherwise
/// the warning sink is told), NonFiniteState naming the step that produced NaN/Inf.
IntegrationResult integrate(const SplitProblem& problem, const StepperConfig& cfg, const State& u0,
                            std::span<const std::size_t> snapshot_steps = {},
                            const SnapshotHook& hook = {}, const WarningSink& warn = {});

/// Pairwise slopes log(e_i/e_{i+1}) / log(h_i/h_{i+1}).
std::vector<double> observed_orders(std::span<const double> hs, std::span<const double> errors);

} // namespace prsplit
