#include "hardy/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/error.hpp"

namespace hardy {

namespace {

constexpr double kTiny = 1e-300;

struct Condensed {
    std::vector<std::size_t> kept;
    PathProblem reduced;
};

double resistance(const std::vector<double>& edge, std::size_t from, std::size_t to) {
    double r = 0.0;
    for (std::size_t i = from; i < to; ++i) r += 1.0 / edge[i];
    return r;
}

Condensed condense(const PathProblem& pp) {
    Condensed c;
    for (std::size_t i = 0; i < pp.mass.size(); ++i)
        if (pp.mass[i] > 0.0) c.kept.push_back(i);
    require(!c.kept.empty(), ErrorKind::Degenerate, "path problem has no positive mass");
    const std::size_t n = pp.mass.size();
    auto& r = c.reduced;
    for (std::size_t a = 0; a < c.kept.size(); ++a) {
        r.mass.push_back(pp.mass[c.kept[a]]);
        if (a + 1 < c.kept.size()) r.edge.push_back(1.0 / resistance(pp.edge, c.kept[a], c.kept[a + 1]));
    }
    if (pp.ground_left > 0.0)
        r.ground_left = 1.0 / (1.0 / pp.ground_left + resistance(pp.edge, 0, c.kept.front()));
    if (pp.ground_right > 0.0)
        r.ground_right = 1.0 / (1.0 / pp.ground_right + resistance(pp.edge, c.kept.back(), n - 1));
    return c;
}

std::vector<double> expand(const PathProblem& pp, const Condensed& c, const std::vector<double>& y) {
    const std::size_t n = pp.mass.size();
    std::vector<double> x(n, 0.0);
    for (std::size_t a = 0; a < c.kept.size(); ++a) x[c.kept[a]] = y[a];
    for (std::size_t a = 0; a + 1 < c.kept.size(); ++a) {
        const std::size_t i = c.kept[a];
        const std::size_t j = c.kept[a + 1];
        const double total = resistance(pp.edge, i, j);
        for (std::size_t t = i + 1; t < j; ++t)
            x[t] = x[i] + resistance(pp.edge, i, t) / total * (x[j] - x[i]);
    }
    const std::size_t k0 = c.kept.front();
    for (std::size_t t = 0; t < k0; ++t) {
        if (pp.ground_left > 0.0) {
            const double total = 1.0 / pp.ground_left + resistance(pp.edge, 0, k0);
            x[t] = x[k0] * (1.0 / pp.ground_left + resistance(pp.edge, 0, t)) / total;
        } else {
            x[t] = x[k0];
        }
    }
    const std::size_t k1 = c.kept.back();
    for (std::size_t t = k1 + 1; t < n; ++t) {
        if (pp.ground_right > 0.0) {
            const double total = 1.0 / pp.ground_right + resistance(pp.edge, k1, n - 1);
            x[t] = x[k1] * (1.0 / pp.ground_right + resistance(pp.edge, t, n - 1)) / total;
        } else {
            x[t] = x[k1];
        }
    }
    return x;
}

// Solves (T - sigma I) z = b in place with partial pivoting.
void shifted_solve(const std::vector<double>& diag, const std::vector<double>& off, double sigma,
                   std::vector<double>& b) {
    const std::size_t n = diag.size();
    double scale = std::abs(sigma);
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(off[i - 1]);
        if (i + 1 < n) row += std::abs(off[i]);
        scale = std::max(scale, row);
    }
    const double floor = std::max(kTiny, std::numeric_limits<double>::epsilon() * scale);
    auto pivot = [&](double& p) {
        if (std::abs(p) < floor) p = p < 0.0 ? -floor : floor;
    };
    if (n == 1) {
        const double d = diag[0] - sigma;
        double d0 = d;
        pivot(d0);
        b[0] /= d0;
        return;
    }
    std::vector<double> d(n), dl(off), du(off), du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<char> swapped(n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            pivot(d[i]);
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    pivot(d[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!swapped[i]) {
            b[i + 1] -= dl[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - dl[i] * b[i];
        }
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

void normalise(std::vector<double>& y) {
    double s = 0.0;
    for (double t : y) s += t * t;
    s = std::sqrt(s);
    if (s > 0.0)
        for (double& t : y) t /= s;
}

}  // namespace

std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double sigma) {
    std::size_t count = 0;
    double q = diag[0] - sigma;
    for (std::size_t i = 0;; ++i) {
        if (q == 0.0) q = -kTiny;
        if (q < 0.0) ++count;
        if (i + 1 >= diag.size()) break;
        q = diag[i + 1] - sigma - off[i] * off[i] / q;
    }
    return count;
}

EigenPair path_eigenpair(const PathProblem& problem) {
    const std::size_t n = problem.mass.size();
    require(n >= 1, ErrorKind::Degenerate, "empty path problem");
    require(problem.edge.size() + 1 == n, ErrorKind::InvalidArgument, "path problem needs n-1 edges");
    const bool grounded = problem.ground_left > 0.0 || problem.ground_right > 0.0;
    const Condensed c = condense(problem);
    const PathProblem& r = c.reduced;
    const std::size_t m = r.mass.size();
    require(grounded || m >= 2, ErrorKind::Degenerate, "ungrounded path problem needs two massive nodes");

    std::vector<double> diag(m, 0.0), off(m > 0 ? m - 1 : 0, 0.0), sq(m);
    for (std::size_t i = 0; i < m; ++i) sq[i] = std::sqrt(r.mass[i]);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        diag[i] += r.edge[i];
        diag[i + 1] += r.edge[i];
        off[i] = -r.edge[i] / (sq[i] * sq[i + 1]);
    }
    diag[0] += r.ground_left;
    diag[m - 1] += r.ground_right;
    for (std::size_t i = 0; i < m; ++i) diag[i] /= r.mass[i];

    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::abs(off[i - 1]);
        if (i + 1 < m) rad += std::abs(off[i]);
        lo = std::min(lo, diag[i] - rad);
        hi = std::max(hi, diag[i] + rad);
    }
    const std::size_t k = grounded ? 0 : 1;
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) break;
        if (sturm_count(diag, off, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    const double lambda = 0.5 * (lo + hi);

    // Null vector of the ungrounded operator in the symmetrised coordinates.
    std::vector<double> null(sq);
    normalise(null);
    auto deflate = [&](std::vector<double>& y) {
        if (grounded) return;
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += y[i] * null[i];
        for (std::size_t i = 0; i < m; ++i) y[i] -= dot * null[i];
    };
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = 1.0 + static_cast<double>(i) / static_cast<double>(m);
    deflate(y);
    normalise(y);
    for (int it = 0; it < 4; ++it) {
        shifted_solve(diag, off, lambda, y);
        deflate(y);
        normalise(y);
    }
    std::vector<double> xr(m);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xr[i] = y[i] / sq[i];
        sum += xr[i] * r.mass[i];
    }
    // Sign convention: positive mass-weighted sum, or positive last entry when that vanishes.
    const bool flip = grounded ? sum < 0.0 : xr.back() < 0.0;
    if (flip)
        for (double& t : xr) t = -t;
    return {lambda, expand(problem, c, xr)};
}

}  // namespace hardy
