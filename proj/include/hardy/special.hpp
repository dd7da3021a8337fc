#pragma once

#include "hardy/core.hpp"

namespace hardy {

/// ln Gamma(z) for z > 0 (Lanczos, g = 7).
[[nodiscard]] double log_gamma(double z);

/// ln B(a, b) for a, b > 0, evaluated without forming the three ln Gamma terms
/// separately so that large arguments keep their relative accuracy.
[[nodiscard]] double log_beta(double a, double b);

/// Euler Beta function B(a, b) = int_0^1 t^(a-1) (1-t)^(b-1) dt.
[[nodiscard]] double beta(double a, double b);

enum class KqpRegime { Diagonal, Strict };

struct FactorKqp {
    double value;
    double p;
    double q;
    KqpRegime regime;
};

/// Below this gap q - p the diagonal formula is used.
inline constexpr double kDiagonalGap = 1e-8;

/// The comparison factor k_{q,p}; requires 1 < p <= q.
[[nodiscard]] FactorKqp k_qp(const Exponents& e);

/// (1 + q/p*)^(1/q) (1 + p*/q)^(1/p*), which sits between k_{q,p} and k_{q,q}.
[[nodiscard]] double k_tilde(const Exponents& e);

/// argmin and minimum of a scalar function on [0, 1].
struct ScalarMin {
    double argmin;
    double value;
};

/// Minimises g^(1-p) a^p + (1-g)^(1-p) b^p over g in (0, 1).
/// An endpoint argmin is returned when a or b vanishes.
[[nodiscard]] ScalarMin min_split_gamma(double a, double b, double p);

/// Minimises alpha t^q + beta (1-t)^q over t in [0, 1].
[[nodiscard]] ScalarMin min_split_power(double alpha, double beta, double q);

}  // namespace hardy
