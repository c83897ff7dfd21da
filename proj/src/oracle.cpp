#include "prsplit/oracle.hpp"

#include <cmath>

namespace prsplit::oracle {

Eigen::VectorXd flatten(const State& u) {
    const auto m = static_cast<Eigen::Index>(u.first.size());
    Eigen::VectorXd x(2 * m);
    for (Eigen::Index k = 0; k < m; ++k) {
        x[k] = u.first[static_cast<std::size_t>(k)];
        x[m + k] = u.second[static_cast<std::size_t>(k)];
    }
    return x;
}

State unflatten(const GridPtr& grid, const Eigen::VectorXd& x) {
    State u(grid);
    const auto m = static_cast<Eigen::Index>(grid->points());
    for (Eigen::Index k = 0; k < m; ++k) {
        u.first[static_cast<std::size_t>(k)] = x[k];
        u.second[static_cast<std::size_t>(k)] = x[m + k];
    }
    return u;
}

DenseOperator densify(const LinearSymbol& sym) {
    const GridPtr& grid = sym.grid();
    if (grid->n() > max_oracle_n) throw OracleError("grid too large for the dense oracle");
    const auto m = static_cast<Eigen::Index>(2 * grid->points());
    DenseOperator op{grid, Eigen::MatrixXd::Zero(m, m)};
    for (Eigen::Index j = 0; j < m; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
        e[j] = 1.0;
        op.matrix.col(j) = flatten(apply_linear(sym, unflatten(grid, e)));
    }
    return op;
}

State dense_resolvent(const DenseOperator& op, double tau, const State& w) {
    if (!w.grid || !w.grid->same_as(*op.grid)) throw GridMismatch();
    const auto m = op.matrix.rows();
    const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m) - tau * op.matrix;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (std::abs(lu.determinant()) == 0.0) throw OracleError("singular dense resolvent system");
    return unflatten(op.grid, lu.solve(flatten(w)));
}

State picard_nonlinear_resolvent(const SplitProblem& problem, double tau, const State& w, double tol,
                                 int max_iter) {
    State v = w;
    double last_change = INFINITY;
    int growth = 0;
    for (int it = 0; it < max_iter; ++it) {
        State next = axpy(tau, problem.apply_F(v), w);
        double change = 0.0;
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t k = 0; k < next[c].size(); ++k)
                change = std::max(change, std::abs(next[c][k] - v[c][k]));
        v = std::move(next);
        if (!std::isfinite(change)) throw OracleError("Picard iteration produced non-finite values");
        if (change <= tol) return v;
        growth = change >= last_change ? growth + 1 : 0;
        if (growth >= 5) throw OracleError("Picard iteration is not contracting");
        last_change = change;
    }
    throw OracleError("Picard iteration did not converge");
}

} // namespace prsplit::oracle
