#pragma once

#include <cstdint>
#include <optional>

#include "hardy/core.hpp"

namespace hardy {

/// The defining ratio of each case:
///   ND  ||x||_q / forward energy with x_{N+1} = 0
///   DN  ||x||_q / backward energy with x_{-M-1} = 0
///   DD  as DN with x_N = 0 as well; x may be given on [-M, N] (x_N must be 0)
///       or on the free slots [-M, N-1]
///   NN  ||x - m(x)||_q / backward energy with x_{-M-1} = x_{-M}
/// Throws Degenerate when the energy vanishes.
[[nodiscard]] double ratio(BoundaryCase c, const Sequence& x, const WeightedInterval& w,
                           const Exponents& e);

struct EstimateConfig {
    int restarts = 4;             ///< random seeds on top of the structured ones
    int max_iterations = 10000;   ///< per smoothing phase
    std::uint64_t seed = 0;
    int memory = 8;               ///< L-BFGS pairs
    double rel_tol = 1e-12;       ///< stop on two consecutive smaller log-ratio gains
    bool smoothing = true;        ///< anneal |t| -> sqrt(t^2 + eps^2) when min(p, q) < 2
    bool parallel = true;
    bool oracle = false;          ///< also run the p = q = 2 eigen oracle
};

struct EstimateResult {
    /// ratio(maximizer), re-evaluated; a lower bound on the optimal constant.
    double a_hat = 0.0;
    /// On [-M, N]; for DD the last entry is the pinned zero.
    Sequence maximizer;
    int restarts = 0;
    bool converged = false;
    int iterations = 0;
    std::optional<double> oracle_value;
};

[[nodiscard]] EstimateResult estimate_A(BoundaryCase c, const WeightedInterval& w, const Exponents& e,
                                        const EstimateConfig& config = {});

struct OracleResult {
    double a;       ///< lambda^(-1/2)
    double lambda;  ///< smallest relevant eigenvalue
    Sequence vector;
};

/// Exact optimal constant at p = q = 2 from the tridiagonal eigenproblem.
[[nodiscard]] OracleResult eigen_oracle_full(BoundaryCase c, const WeightedInterval& w);
[[nodiscard]] double eigen_oracle(BoundaryCase c, const WeightedInterval& w);

/// Max-norm residual over the free nodes of the p = q characteristic equation
///   sum_{edges at n} v |x_n - x_other|^(p-2) (x_n - x_other) = lambda u_n |x_n - m|^(q-2) (x_n - m),
/// with m = m(x) for NN and 0 otherwise.
[[nodiscard]] double characteristic_residual(BoundaryCase c, const Sequence& x, double lambda,
                                             const WeightedInterval& w, const Exponents& e);

}  // namespace hardy
