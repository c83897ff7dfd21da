#pragma once

// Brute-force reference implementations for validating the fast paths on tiny grids.

#include "prsplit/errors.hpp"
#include "prsplit/linear_symbol.hpp"
#include "prsplit/models.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace prsplit::oracle {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t max_oracle_n = 16;

/// Dense matrix of a linear operator on flattened states [first; second], size 2n².
struct DenseOperator {
    GridPtr grid;
    Eigen::MatrixXd matrix;

    std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
};

/// Builds the matrix column by column from apply_linear on unit states.
/// Throws OracleError when n exceeds max_oracle_n.
DenseOperator densify(const LinearSymbol& sym);

Eigen::VectorXd flatten(const State& u);
State unflatten(const GridPtr& grid, const Eigen::VectorXd& x);

/// Solves (I - τA)x = w by LU factorisation.
State dense_resolvent(const DenseOperator& op, double tau, const State& w);

/// Fixed-point iteration v ← w + τF(v) from v = w until successive iterates differ by at
/// most tol in max-norm. Throws OracleError on divergence or after max_iter sweeps.
State picard_nonlinear_resolvent(const SplitProblem& problem, double tau, const State& w, double tol,
                                 int max_iter);

} // namespace prsplit::oracle
