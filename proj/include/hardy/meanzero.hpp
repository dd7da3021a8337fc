#pragma once

#include <span>

#include "hardy/core.hpp"

namespace hardy {

struct MeanResult {
    double m = 0.0;
    /// f(m)
    double residual = 0.0;
    int iterations = 0;
};

inline constexpr int kMeanMaxIterations = 200;
inline constexpr double kMeanRelativeWidth = 1e-14;

/// f(t) = sum_n u_n sgn(x_n - t) |x_n - t|^(q-1)
[[nodiscard]] double f_eval(const Sequence& x, const WeightedInterval& w, const Exponents& e, double t);
/// F(t) = sum_n u_n |x_n - t|^q, so that F' = -q f.
[[nodiscard]] double F_eval(const Sequence& x, const WeightedInterval& w, const Exponents& e, double t);

/// The unique root m(x) of f. Constant x returns that constant.
[[nodiscard]] MeanResult solve_m(const Sequence& x, const WeightedInterval& w, const Exponents& e);

/// Same root on raw arrays of equal length.
[[nodiscard]] MeanResult solve_m(std::span<const double> x, std::span<const double> u, double q);

/// True iff F(m) <= F(m - eps) and F(m) <= F(m + eps).
[[nodiscard]] bool check_min_property(const Sequence& x, const WeightedInterval& w,
                                      const Exponents& e, double m, double eps);

}  // namespace hardy
