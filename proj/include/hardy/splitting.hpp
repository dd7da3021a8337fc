#pragma once

#include "hardy/core.hpp"

namespace hardy {

/// A cut (zeta, gamma) with the two curve values there. For the NN C-curves
/// b_minus and b_plus hold C-(zeta, gamma) and C+(zeta, gamma).
struct SplitPoint {
    Index zeta = 0;
    double gamma = 0.0;
    double b_minus = 0.0;
    double b_plus = 0.0;
};

struct CurvePair {
    double minus;
    double plus;
};

struct SplitFamilies {
    WeightedInterval left;
    WeightedInterval right;
};

struct SplitSequences {
    Sequence minus;
    Sequence plus;
};

/// Both sides of the two splitting identities, as q-th and p-th power sums.
struct SplitIdentity {
    double norm_whole;
    double norm_split;
    double energy_whole;
    double energy_split;
};

inline constexpr double kCrossingRelTol = 1e-10;
inline constexpr double kGammaTol = 1e-12;

// ---- DD ----

/// Left family on [-M, zeta], right family on [zeta+1, N+1]. The right family's
/// v at N+1 only pads the array (its x is pinned to 0) and repeats v_N.
/// Requires -M < zeta < N.
[[nodiscard]] SplitFamilies dd_split_weights(const WeightedInterval& w, Index zeta, double gamma);

/// x on [-M, N] with x_N = 0 (and x_{-M-1} = 0): x- on [-M, zeta], x+ on [zeta+1, N+1].
[[nodiscard]] SplitSequences dd_split_sequences(const Sequence& x, Index zeta);

[[nodiscard]] SplitIdentity dd_split_identities(const WeightedInterval& w, const Exponents& e,
                                                const Sequence& x, Index zeta, double gamma);

/// B-(zeta, gamma) and B+(zeta, gamma) for zeta in [-M, N].
[[nodiscard]] CurvePair dd_b_curves(const WeightedInterval& w, const Exponents& e, Index zeta,
                                    double gamma);

/// A cut where B- = B+. Needs at least two points.
[[nodiscard]] SplitPoint dd_find_crossing(const WeightedInterval& w, const Exponents& e);

/// Test sequence for the pair x < y, returned on [-M, N] with x_N = 0 and a
/// Dirichlet left pad.
[[nodiscard]] Sequence dd_witness(const WeightedInterval& w, const Exponents& e, Index x, Index y);

// ---- NN ----

/// Left family on [-M+1, zeta] (u shifted by one), right family on [zeta, N].
/// The weight at zeta is split in hat space: gamma v_hat and (1-gamma) v_hat.
/// Requires -M < zeta <= N.
[[nodiscard]] SplitFamilies nn_split_weights(const WeightedInterval& w, const Exponents& e,
                                             Index zeta, double gamma);

/// x- on [-M+1, zeta+1] and x+ on [zeta-1, N], sharing the node
/// (1-gamma) x_{zeta-1} + gamma x_zeta.
[[nodiscard]] SplitSequences nn_split_sequences(const Sequence& x, Index zeta, double gamma);

[[nodiscard]] SplitIdentity nn_split_identities(const WeightedInterval& w, const Exponents& e,
                                                const Sequence& x, Index zeta, double gamma);

/// B-(zeta, gamma) and B+(zeta, gamma) for zeta in [-M, N].
[[nodiscard]] CurvePair nn_b_curves(const WeightedInterval& w, const Exponents& e, Index zeta,
                                    double gamma);

/// C-(zeta, gamma) and C+(zeta, gamma) for the pair x < y, zeta in [x+1, y].
[[nodiscard]] CurvePair nn_c_curves(const WeightedInterval& w, const Exponents& e, Index x, Index y,
                                    Index zeta, double gamma);

/// A cut in [x+1, y] where C- = C+.
[[nodiscard]] SplitPoint nn_find_crossing_C(const WeightedInterval& w, const Exponents& e, Index x,
                                            Index y);

/// A cut where the NN curves B- and B+ meet. Needs at least two points.
[[nodiscard]] SplitPoint nn_find_crossing(const WeightedInterval& w, const Exponents& e);

/// Mean-zero test sequence for the pair x < y with a Neumann left pad.
[[nodiscard]] Sequence nn_witness(const WeightedInterval& w, const Exponents& e, Index x, Index y);

}  // namespace hardy
