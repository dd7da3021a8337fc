#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "hardy/core.hpp"

namespace hardy::testing {

using Rng = std::mt19937_64;

/// Log-uniform positive weights spanning roughly [1/spread, spread].
inline std::vector<double> random_weights(Rng& rng, std::size_t n, double spread = 10.0) {
    std::uniform_real_distribution<double> d(-std::log(spread), std::log(spread));
    std::vector<double> w(n);
    for (auto& x : w) x = std::exp(d(rng));
    return w;
}

inline std::vector<double> random_values(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> x(n);
    for (auto& t : x) t = d(rng);
    return x;
}

inline WeightedInterval random_interval(Rng& rng, std::size_t n, double p, double spread = 10.0) {
    std::uniform_int_distribution<int> off(-5, 5);
    const Index first = off(rng);
    auto u = random_weights(rng, n, spread);
    auto v = random_weights(rng, n, spread);
    return WeightedInterval(first, std::move(u), std::move(v), p);
}

inline double rel_diff(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

/// Plain left-to-right sum of f(i) for i in [lo, hi]; 0 when lo > hi.
template <typename F>
double naive_sum(Index lo, Index hi, F f) {
    double s = 0.0;
    for (Index i = lo; i <= hi; ++i) s += f(i);
    return s;
}

/// Adaptive Simpson quadrature on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                               int depth = 50) {
    struct Rec {
        const std::function<double(double)>& f;
        double step(double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m);
            const double rm = 0.5 * (m + b);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
            return step(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
                   step(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
        }
    } rec{f};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return rec.step(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Optimal p = q = 2 constant from a dense eigen-decomposition of the
/// stiffness matrix K (energy quadratic form over the free unknowns) against
/// the diagonal mass u. K is assembled directly from the defining energies.
inline double dense_oracle(BoundaryCase c, const WeightedInterval& w) {
    const std::size_t L = w.size();
    const auto u = w.u();
    const auto v = w.v();
    // Unknowns: x over [-M, N], except DD where x_N = 0 is dropped.
    const std::size_t n = c == BoundaryCase::DD ? L - 1 : L;
    std::vector<std::vector<double>> K(n, std::vector<double>(n, 0.0));
    auto add_edge = [&](std::ptrdiff_t i, std::ptrdiff_t j, double cond) {
        // cond (x_i - x_j)^2, index -1 means a pinned zero.
        if (i >= 0 && static_cast<std::size_t>(i) < n) K[i][i] += cond;
        if (j >= 0 && static_cast<std::size_t>(j) < n) K[j][j] += cond;
        if (i >= 0 && j >= 0 && static_cast<std::size_t>(i) < n && static_cast<std::size_t>(j) < n) {
            K[i][j] -= cond;
            K[j][i] -= cond;
        }
    };
    for (std::size_t s = 0; s < L; ++s) {
        const auto i = static_cast<std::ptrdiff_t>(s);
        switch (c) {
            case BoundaryCase::ND:  // v_n (x_n - x_{n+1})^2, x_{N+1} = 0
                add_edge(i, s + 1 < L ? i + 1 : -1, v[s]);
                break;
            case BoundaryCase::DN:  // v_n (x_n - x_{n-1})^2, x_{-M-1} = 0
            case BoundaryCase::DD:
                add_edge(s == L - 1 && c == BoundaryCase::DD ? -1 : i, s == 0 ? -1 : i - 1, v[s]);
                break;
            case BoundaryCase::NN:
                if (s > 0) add_edge(i, i - 1, v[s]);
                break;
        }
    }
    // Symmetric form M^{-1/2} K M^{-1/2}; the largest ratio is 1/sqrt(lambda_min).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) K[i][j] /= std::sqrt(u[i] * u[j]);
    const auto ev = jacobi_eigenvalues(K);
    const double lambda = c == BoundaryCase::NN ? ev[1] : ev[0];
    return 1.0 / std::sqrt(lambda);
}

}  // namespace hardy::testing
