#include "prsplit/integrators.hpp"

#include "prsplit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace prsplit {

std::string scheme_name(Scheme s) { return s == Scheme::PeacemanRachford ? "pr" : "lie"; }

State pr_step(const SplitProblem& problem, double h, const State& u) {
    const double tau = 0.5 * h;
    State v = axpy(tau, problem.apply_F(u), u);
    v = linear_cayley(problem.symbol(), tau, v);
    return problem.nonlinear_resolvent(tau, v);
}

State lie_step(const SplitProblem& problem, double h, const State& u) {
    return problem.nonlinear_resolvent(h, linear_resolvent(problem.symbol(), h, u));
}

State aux_pr_step(const SplitProblem& problem, double h, const State& u) {
    const double tau = 0.5 * h;
    const State w = problem.nonlinear_resolvent(tau, u);
    // (I + τF)φ = I + 2τFφ
    const State v = axpy(2.0 * tau, problem.apply_F(w), u);
    return linear_cayley(problem.symbol(), tau, v);
}

double stability_limit(Scheme s) { return s == Scheme::PeacemanRachford ? 1.0 : 0.5; }

bool stability_satisfied(const SplitProblem& problem, Scheme s, double h) {
    const double m = std::max(problem.dissipativity_A(), problem.dissipativity_F());
    return h * m <= stability_limit(s);
}

IntegrationResult integrate(const SplitProblem& problem, const StepperConfig& cfg, const State& u0,
                            std::span<const std::size_t> snapshot_steps, const SnapshotHook& hook,
                            const WarningSink& warn) {
    if (!(cfg.h > 0.0) || !std::isfinite(cfg.h)) throw ConfigError("step size must be positive and finite");
    if (!u0.grid || !u0.grid->same_as(*problem.grid())) throw GridMismatch();

    if (!stability_satisfied(problem, cfg.scheme, cfg.h)) {
        std::ostringstream msg;
        msg << "step size h=" << cfg.h << " violates h*max{M[A],M[F]} <= " << stability_limit(cfg.scheme)
            << " for " << problem.name() << " (M[F]=" << problem.dissipativity_F() << ")";
        if (cfg.enforce_stability) throw StabilityViolation(msg.str());
        if (warn) warn(msg.str());
    }
    if (!u0.all_finite()) throw NonFiniteState("initial state is not finite", 0);

    std::vector<std::size_t> wanted(snapshot_steps.begin(), snapshot_steps.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    IntegrationResult result;
    auto record = [&](std::size_t step, const State& s) {
        if (!std::binary_search(wanted.begin(), wanted.end(), step)) return;
        result.snapshots.emplace_back(step, s);
        if (hook) hook(step, static_cast<double>(step) * cfg.h, s);
    };

    State u = u0;
    record(0, u);
    for (std::size_t step = 1; step <= cfg.n_steps; ++step) {
        try {
            u = cfg.scheme == Scheme::PeacemanRachford ? pr_step(problem, cfg.h, u) : lie_step(problem, cfg.h, u);
        } catch (const StepFailure& e) {
            std::ostringstream msg;
            msg << "step " << step << ": " << e.what();
            throw StepFailure(msg.str(), e.row(), e.col());
        }
        if (!u.all_finite()) {
            std::ostringstream msg;
            msg << "non-finite state after step " << step;
            throw NonFiniteState(msg.str(), step);
        }
        record(step, u);
    }
    result.final_state = std::move(u);
    return result;
}

std::vector<double> observed_orders(std::span<const double> hs, std::span<const double> errors) {
    if (hs.size() != errors.size() || hs.size() < 2)
        throw std::invalid_argument("order estimate needs matching lists of at least two entries");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (!(errors[i] > 0.0)) throw DegenerateMeasurement("error values must be positive for an order estimate");
        if (!(hs[i] > 0.0)) throw std::invalid_argument("step sizes must be positive");
    }
    std::vector<double> out;
    out.reserve(hs.size() - 1);
    for (std::size_t i = 0; i + 1 < hs.size(); ++i)
        out.push_back(std::log(errors[i] / errors[i + 1]) / std::log(hs[i] / hs[i + 1]));
    return out;
}

} // namespace prsplit
