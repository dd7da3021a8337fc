#pragma once

#include <string_view>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

/// u_n = 1, v_hat_n = n^(-p*/q) - (n+1)^(-p*/q) on [1, N].
[[nodiscard]] WeightedInterval gen_example51(const Exponents& e, Index N);

/// Closed form of sum_{j=n}^{N} v_hat_j for gen_example51: n^(-p*/q) - (N+1)^(-p*/q).
[[nodiscard]] double example51_tail(const Exponents& e, Index n, Index N);

/// u_n = n^(-alpha), v_n = n^beta on [1, N].
[[nodiscard]] WeightedInterval gen_example52(double alpha, double beta, const Exponents& e, Index N);

/// The alpha threshold for a given beta: 1 when beta = p - 1, else 1 + (q/p)(p - 1 - beta).
[[nodiscard]] double example52_threshold(double beta, const Exponents& e);

/// Whether the inequality is valid on the infinite interval: alpha > 1 when
/// beta = p - 1, alpha >= threshold otherwise.
[[nodiscard]] bool example52_valid(double alpha, double beta, const Exponents& e);

enum class Growth { Bounded, Divergent, Inconclusive };

[[nodiscard]] std::string_view growth_name(Growth g) noexcept;

struct GrowthClassification {
    Growth verdict;
    std::vector<Index> n;
    std::vector<double> b;        ///< DD upper constant at each truncation
    std::vector<double> ratios;   ///< b[k+1] / b[k]
};

/// Relative increment below which the last step counts as bounded.
inline constexpr double kBoundedIncrement = 1e-3;

/// Classifies B^{*DD}(N) along an increasing list of truncations (at least
/// two): divergent when every successive ratio exceeds 1 + 1/(2 ln N_k),
/// bounded when the last relative increment is below kBoundedIncrement.
[[nodiscard]] GrowthClassification classify_growth(const std::vector<Index>& n_list,
                                                   const std::vector<double>& values);

[[nodiscard]] GrowthClassification classify_example52(double alpha, double beta, const Exponents& e,
                                                      const std::vector<Index>& n_list);

/// u_n = r^n, v_n = b r^n on [1, N]; needs 0 < r < 1 and b > 0.
[[nodiscard]] WeightedInterval gen_example53(double r, double b, const Exponents& e, Index N);

struct Example53ClosedForm {
    double upper;  ///< the displayed B^{*NN}
    double lower;  ///< the displayed B_*^{NN}
};

/// The closed forms exactly as displayed for this example.
[[nodiscard]] Example53ClosedForm example53_closed_form(double r, double b, const Exponents& e, Index N);

/// The displayed pair objectives F(x, y) and F0(x, y).
[[nodiscard]] double example53_F(double r, const Exponents& e, Index N, Index x, Index y);
[[nodiscard]] double example53_F0(double r, const Exponents& e, Index N, Index x, Index y);

/// Prefactor b^(-1/p) (r^(1-p*) - 1)^(-1/p*) (1 - r)^(-1/q) multiplying F^(1/p*) and F0^(1/q*).
[[nodiscard]] double example53_prefactor(double r, double b, const Exponents& e);

}  // namespace hardy
