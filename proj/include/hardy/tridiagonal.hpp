#pragma once

#include <vector>

namespace hardy {

/// Quadratic-form problem on a path graph:
///   sup  sum_i mass_i x_i^2  /  ( sum_i edge_i (x_i - x_{i+1})^2 + g_l x_0^2 + g_r x_last^2 )
/// With both grounds zero the constants are quotiented out, so the relevant
/// eigenvalue is the second smallest. Zero masses are condensed away.
struct PathProblem {
    std::vector<double> mass;
    std::vector<double> edge;  ///< edge[i] joins nodes i and i+1
    double ground_left = 0.0;
    double ground_right = 0.0;
};

struct EigenPair {
    double lambda;
    std::vector<double> vector;  ///< on the original nodes, mass-normalised
};

/// Smallest eigenvalue of K x = lambda M x (second smallest when ungrounded),
/// by Sturm-count bisection, with its eigenvector from inverse iteration.
[[nodiscard]] EigenPair path_eigenpair(const PathProblem& problem);

/// Number of eigenvalues of the symmetric tridiagonal (diag, off) below sigma.
[[nodiscard]] std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                                      double sigma);

}  // namespace hardy
