#include "hardy/example_weights.hpp"

#include <cmath>
#include <sstream>

#include "hardy/bounds.hpp"
#include "hardy/error.hpp"

namespace hardy {

namespace {

void require_truncation(Index N, Index min, const char* what) {
    if (N < min) {
        std::ostringstream os;
        os << what << " needs N >= " << min << " (got " << N << ")";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

}  // namespace

WeightedInterval gen_example51(const Exponents& e, Index N) {
    require_truncation(N, 1, "example 51");
    const double s = e.p_star() / e.q();
    std::vector<double> u(static_cast<std::size_t>(N), 1.0);
    std::vector<double> vh(static_cast<std::size_t>(N));
    for (Index n = 1; n <= N; ++n) {
        const double dn = static_cast<double>(n);
        // n^-s - (n+1)^-s = -n^-s expm1(-s log1p(1/n)), free of cancellation
        vh[static_cast<std::size_t>(n - 1)] = -std::pow(dn, -s) * std::expm1(-s * std::log1p(1.0 / dn));
    }
    return WeightedInterval::from_hat(1, std::move(u), std::move(vh), e.p());
}

double example51_tail(const Exponents& e, Index n, Index N) {
    const double s = e.p_star() / e.q();
    const double dn = static_cast<double>(n);
    const double gap = static_cast<double>(N + 1 - n) / dn;
    return -std::pow(dn, -s) * std::expm1(-s * std::log1p(gap));
}

WeightedInterval gen_example52(double alpha, double beta, const Exponents& e, Index N) {
    require_truncation(N, 2, "example 52");
    require(std::isfinite(alpha) && std::isfinite(beta), ErrorKind::InvalidArgument,
            "example 52 needs finite alpha and beta");
    std::vector<double> u(static_cast<std::size_t>(N));
    std::vector<double> v(static_cast<std::size_t>(N));
    for (Index n = 1; n <= N; ++n) {
        const double dn = static_cast<double>(n);
        u[static_cast<std::size_t>(n - 1)] = std::pow(dn, -alpha);
        v[static_cast<std::size_t>(n - 1)] = std::pow(dn, beta);
    }
    return WeightedInterval(1, std::move(u), std::move(v), e.p());
}

double example52_threshold(double beta, const Exponents& e) {
    const double p = e.p();
    if (beta == p - 1.0) return 1.0;
    return 1.0 + e.q() / p * (p - 1.0 - beta);
}

bool example52_valid(double alpha, double beta, const Exponents& e) {
    const double t = example52_threshold(beta, e);
    return beta == e.p() - 1.0 ? alpha > t : alpha >= t;
}

std::string_view growth_name(Growth g) noexcept {
    switch (g) {
        case Growth::Bounded: return "bounded";
        case Growth::Divergent: return "divergent";
        case Growth::Inconclusive: return "inconclusive";
    }
    return "?";
}

GrowthClassification classify_growth(const std::vector<Index>& n_list, const std::vector<double>& values) {
    require(n_list.size() >= 2 && n_list.size() == values.size(), ErrorKind::InvalidArgument,
            "growth classification needs at least two truncations");
    GrowthClassification c{Growth::Inconclusive, n_list, values, {}};
    bool diverging = true;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const double r = values[k + 1] / values[k];
        c.ratios.push_back(r);
        if (!(r > 1.0 + 1.0 / (2.0 * std::log(static_cast<double>(n_list[k]))))) diverging = false;
    }
    const double last = values.back() / values[values.size() - 2] - 1.0;
    if (diverging)
        c.verdict = Growth::Divergent;
    else if (std::abs(last) < kBoundedIncrement)
        c.verdict = Growth::Bounded;
    return c;
}

GrowthClassification classify_example52(double alpha, double beta, const Exponents& e,
                                        const std::vector<Index>& n_list) {
    std::vector<double> values;
    for (Index N : n_list) values.push_back(b_dd_upper(gen_example52(alpha, beta, e, N), e).value);
    return classify_growth(n_list, values);
}

WeightedInterval gen_example53(double r, double b, const Exponents& e, Index N) {
    require(r > 0.0 && r < 1.0, ErrorKind::InvalidArgument, "example 53 needs 0 < r < 1");
    require(b > 0.0 && std::isfinite(b), ErrorKind::InvalidArgument, "example 53 needs b > 0");
    require_truncation(N, 2, "example 53");
    std::vector<double> u(static_cast<std::size_t>(N));
    std::vector<double> v(static_cast<std::size_t>(N));
    for (Index n = 1; n <= N; ++n) {
        const double rn = std::pow(r, static_cast<double>(n));
        u[static_cast<std::size_t>(n - 1)] = rn;
        v[static_cast<std::size_t>(n - 1)] = b * rn;
    }
    return WeightedInterval(1, std::move(u), std::move(v), e.p());
}

double example53_prefactor(double r, double b, const Exponents& e) {
    const double ps = e.p_star();
    return std::pow(b, -1.0 / e.p()) * std::pow(std::pow(r, 1.0 - ps) - 1.0, -1.0 / ps) *
           std::pow(1.0 - r, -1.0 / e.q());
}

double example53_F(double r, const Exponents& e, Index N, Index x, Index y) {
    const double ps = e.p_star();
    const double q = e.q();
    const double num = std::pow(r, static_cast<double>(y) * (1.0 - ps)) - std::pow(r, static_cast<double>(x + 1) * (1.0 - ps));
    const double den = std::pow(r - std::pow(r, static_cast<double>(x + 1)), -ps / q) +
                       std::pow(std::pow(r, static_cast<double>(y)) - std::pow(r, static_cast<double>(N + 1)), -ps / q);
    return num / den;
}

double example53_F0(double r, const Exponents& e, Index N, Index x, Index y) {
    const double ps = e.p_star();
    const double qs = e.q_star();
    const double diff = std::pow(r, static_cast<double>(y) * (1.0 - ps)) - std::pow(r, static_cast<double>(x + 1) * (1.0 - ps));
    const double den = std::pow(r - std::pow(r, static_cast<double>(x + 1)), 1.0 - qs) +
                       std::pow(std::pow(r, static_cast<double>(y)) - std::pow(r, static_cast<double>(N + 1)), 1.0 - qs);
    return std::pow(diff, qs / ps) / den;
}

Example53ClosedForm example53_closed_form(double r, double b, const Exponents& e, Index N) {
    require(r > 0.0 && r < 1.0, ErrorKind::InvalidArgument, "example 53 needs 0 < r < 1");
    require(b > 0.0, ErrorKind::InvalidArgument, "example 53 needs b > 0");
    const double ps = e.p_star();
    const double qs = e.q_star();
    const double q = e.q();
    const double dN = static_cast<double>(N);
    const double head = std::pow(b, -1.0 / e.p()) * std::pow(std::pow(r, 1.0 - ps) - 1.0, -1.0 / ps);
    const double diff = std::pow(r, dN * (1.0 - ps)) - std::pow(r, 2.0 * (1.0 - ps));
    const double upper = head * std::pow(diff / (std::pow(r, -ps / q) + std::pow(r, dN * (-ps / q))), 1.0 / ps);
    const double lower =
        head * std::pow(std::pow(diff, qs / ps) / (std::pow(r, 1.0 - qs) + std::pow(r, dN * (1.0 - qs))), 1.0 / qs);
    return {upper, lower};
}

}  // namespace hardy
