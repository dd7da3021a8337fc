#include "hardy/meanzero.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

double f_raw(std::span<const double> x, std::span<const double> u, double q, double t) {
    std::vector<double> terms(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) terms[i] = u[i] * signed_pow(x[i] - t, q - 1.0);
    return pairwise_sum(terms);
}

double fprime_raw(std::span<const double> x, std::span<const double> u, double q, double t) {
    std::vector<double> terms(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) terms[i] = u[i] * abs_pow(x[i] - t, q - 2.0);
    return -(q - 1.0) * pairwise_sum(terms);
}

void require_matching(const Sequence& x, const WeightedInterval& w) {
    require(x.spans(w), ErrorKind::InvalidArgument, "sequence and weights cover different intervals");
}

}  // namespace

double f_eval(const Sequence& x, const WeightedInterval& w, const Exponents& e, double t) {
    require_matching(x, w);
    return f_raw(x.values(), w.u(), e.q(), t);
}

double F_eval(const Sequence& x, const WeightedInterval& w, const Exponents& e, double t) {
    require_matching(x, w);
    const auto xs = x.values();
    const auto u = w.u();
    std::vector<double> terms(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) terms[i] = u[i] * abs_pow(xs[i] - t, e.q());
    return pairwise_sum(terms);
}

MeanResult solve_m(std::span<const double> x, std::span<const double> u, double q) {
    require(!x.empty(), ErrorKind::InvalidArgument, "solve_m needs a nonempty sequence");
    require(x.size() == u.size(), ErrorKind::InvalidArgument, "solve_m: x and u differ in length");
    require(q > 1.0, ErrorKind::InvalidArgument, "solve_m needs q > 1");

    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) return {lo, 0.0, 0};

    if (q == 2.0) {
        std::vector<double> ux(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) ux[i] = u[i] * x[i];
        const double m = std::clamp(pairwise_sum(ux) / pairwise_sum(u), lo, hi);
        return {m, f_raw(x, u, q, m), 0};
    }

    const double tol = kMeanRelativeWidth * (hi - lo);
    const bool newton = q >= 2.0;
    double t = 0.5 * (lo + hi);
    double best = t;
    double best_f = f_raw(x, u, q, t);
    int it = 0;
    while (it < kMeanMaxIterations && hi - lo > tol) {
        ++it;
        const double ft = f_raw(x, u, q, t);
        if (std::abs(ft) < std::abs(best_f)) {
            best = t;
            best_f = ft;
        }
        if (ft == 0.0) break;
        // f is decreasing: positive means the root lies to the right
        if (ft > 0.0)
            lo = t;
        else
            hi = t;
        double next = 0.5 * (lo + hi);
        if (newton) {
            const double d = fprime_raw(x, u, q, t);
            if (d < 0.0) {
                const double cand = t - ft / d;
                if (cand > lo && cand < hi) next = cand;
            }
        }
        if (next == t) break;
        t = next;
    }
    const double ft = f_raw(x, u, q, t);
    if (std::abs(ft) < std::abs(best_f)) {
        best = t;
        best_f = ft;
    }
    return {best, best_f, it};
}

MeanResult solve_m(const Sequence& x, const WeightedInterval& w, const Exponents& e) {
    require_matching(x, w);
    return solve_m(x.values(), w.u(), e.q());
}

bool check_min_property(const Sequence& x, const WeightedInterval& w, const Exponents& e, double m,
                        double eps) {
    require(eps > 0.0, ErrorKind::InvalidArgument, "check_min_property needs eps > 0");
    const double fm = F_eval(x, w, e, m);
    return fm <= F_eval(x, w, e, m - eps) && fm <= F_eval(x, w, e, m + eps);
}

}  // namespace hardy
