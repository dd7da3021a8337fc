#pragma once

#include <optional>

#include "hardy/core.hpp"
#include "hardy/special.hpp"

namespace hardy {

/// A supremum together with the index (ND, DN: x == y) or pair x < y attaining it.
/// Ties go to the lexicographically smallest index or pair.
struct SupResult {
    double value = 0.0;
    Index x = 0;
    Index y = 0;
};

/// sup_n (sum_{-M}^n u)^(1/q) (sum_n^N v_hat)^(1/p*)
[[nodiscard]] SupResult b_nd(const WeightedInterval& w, const Exponents& e);
/// sup_n (sum_{-M}^n v_hat)^(1/p*) (sum_n^N u)^(1/q)
[[nodiscard]] SupResult b_dn(const WeightedInterval& w, const Exponents& e);

/// Pair suprema over -M <= x < y <= N. All of them need at least two points.
[[nodiscard]] SupResult b_dd_lower(const WeightedInterval& w, const Exponents& e);
[[nodiscard]] SupResult b_dd_upper(const WeightedInterval& w, const Exponents& e);
[[nodiscard]] SupResult b_nn_lower(const WeightedInterval& w, const Exponents& e);
[[nodiscard]] SupResult b_nn_upper(const WeightedInterval& w, const Exponents& e);
[[nodiscard]] SupResult b_opic(const WeightedInterval& w, const Exponents& e);

/// Everything the two-sided estimate B_* <= A <= k B^* needs for one case.
struct BoundsReport {
    BoundaryCase kase;
    double p;
    double q;
    SupResult lower;
    SupResult upper;
    /// Only defined for p <= q.
    std::optional<FactorKqp> k;
    /// DD only.
    std::optional<SupResult> opic;

    [[nodiscard]] double b_lower() const noexcept { return lower.value; }
    [[nodiscard]] double b_upper() const noexcept { return upper.value; }
    /// k * B^*, or nullopt when p > q.
    [[nodiscard]] std::optional<double> upper_estimate() const;
};

[[nodiscard]] BoundsReport compute_bounds(BoundaryCase c, const WeightedInterval& w,
                                          const Exponents& e);

/// Dispatches to the lower (B_*) constant of a case.
[[nodiscard]] SupResult lower_constant(BoundaryCase c, const WeightedInterval& w,
                                       const Exponents& e);
/// Dispatches to the upper (B^*) constant of a case.
[[nodiscard]] SupResult upper_constant(BoundaryCase c, const WeightedInterval& w,
                                       const Exponents& e);

}  // namespace hardy
