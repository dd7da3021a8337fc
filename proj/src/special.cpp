#include "hardy/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// Gamma(z) = sqrt(2 pi) (z + g - 1/2)^(z - 1/2) exp(-(z + g - 1/2)) lanczos_sum(z), z >= 1/2.
double lanczos_sum(double z) {
    double s = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) s += kLanczos[i] / (z - 1.0 + static_cast<double>(i));
    return s;
}

void require_positive(double a, const char* name) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        std::ostringstream os;
        os << name << " must be finite and > 0 (got " << a << ")";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

}  // namespace

double log_gamma(double z) {
    require_positive(z, "log_gamma argument");
    double shift = 0.0;
    while (z < 1.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    const double t = z + kLanczosG - 0.5;
    return shift + kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double log_beta(double a, double b) {
    require_positive(a, "beta argument a");
    require_positive(b, "beta argument b");
    // B(a, b) = B(a + 1, b) (a + b) / a
    double shift = 0.0;
    while (a < 1.0) {
        shift += std::log((a + b) / a);
        a += 1.0;
    }
    while (b < 1.0) {
        shift += std::log((a + b) / b);
        b += 1.0;
    }
    const double cgh = a + b + kLanczosG - 0.5;
    const double sums = std::log(lanczos_sum(a) * lanczos_sum(b) / lanczos_sum(a + b));
    return shift + kHalfLog2Pi + sums + (a - 0.5) * std::log1p(-b / cgh) +
           (b - 0.5) * std::log1p(-a / cgh) - 0.5 * std::log(cgh) + 0.5 - kLanczosG;
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

FactorKqp k_qp(const Exponents& e) {
    e.require_ordered("k_qp");
    const double p = e.p();
    const double q = e.q();
    if (q - p < kDiagonalGap) {
        const double ps = e.p_star();
        const double value = std::exp(std::log(p) / p + std::log(ps) / ps);
        return {value, p, q, KqpRegime::Diagonal};
    }
    const double gap = q - p;
    const double lb = log_beta(p / gap, p * (q - 1.0) / gap);
    const double lv = (1.0 / p - 1.0 / q) * (std::log(gap) - std::log(p) - lb);
    return {std::exp(lv), p, q, KqpRegime::Strict};
}

double k_tilde(const Exponents& e) {
    const double q = e.q();
    const double ps = e.p_star();
    return std::pow(1.0 + q / ps, 1.0 / q) * std::pow(1.0 + ps / q, 1.0 / ps);
}

ScalarMin min_split_gamma(double a, double b, double p) {
    require(a >= 0.0 && b >= 0.0 && std::isfinite(a) && std::isfinite(b), ErrorKind::InvalidArgument,
            "min_split_gamma needs finite a, b >= 0");
    require(a + b > 0.0, ErrorKind::Degenerate, "min_split_gamma needs a + b > 0");
    require(p > 1.0, ErrorKind::InvalidArgument, "min_split_gamma needs p > 1");
    if (a == 0.0) return {0.0, std::pow(b, p)};
    if (b == 0.0) return {1.0, std::pow(a, p)};
    return {a / (a + b), std::pow(a + b, p)};
}

ScalarMin min_split_power(double alpha, double beta_, double q) {
    require_positive(alpha, "min_split_power alpha");
    require_positive(beta_, "min_split_power beta");
    require(q > 1.0, ErrorKind::InvalidArgument, "min_split_power needs q > 1");
    const double qs = Exponents::conjugate(q);
    const double ra = std::pow(alpha, qs - 1.0);
    const double rb = std::pow(beta_, qs - 1.0);
    const double value = std::pow(std::pow(alpha, 1.0 - qs) + std::pow(beta_, 1.0 - qs), 1.0 - q);
    return {rb / (ra + rb), value};
}

}  // namespace hardy
