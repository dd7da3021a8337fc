#include "hardy/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/meanzero.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

void require_gamma(double gamma) {
    require(gamma >= 0.0 && gamma <= 1.0, ErrorKind::InvalidArgument, "gamma must lie in [0, 1]");
}

void require_zeta(Index zeta, Index lo, Index hi, const char* what) {
    if (zeta < lo || zeta > hi) {
        std::ostringstream os;
        os << what << ": zeta = " << zeta << " outside [" << lo << ", " << hi << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

void require_pair(const WeightedInterval& w, Index x, Index y) {
    if (!(w.first() <= x && x < y && y <= w.last())) {
        std::ostringstream os;
        os << "pair (" << x << ", " << y << ") is not -M <= x < y <= N on [" << w.first() << ", "
           << w.last() << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

std::size_t at(const WeightedInterval& w, Index n) { return static_cast<std::size_t>(n - w.first()); }

// v |d|^p written through v_hat so that v_hat = 0 (infinite v) with d = 0 gives 0.
double hat_energy_term(double v_hat, double d, double p) {
    if (d == 0.0) return 0.0;
    return std::pow(v_hat, 1.0 - p) * abs_pow(d, p);
}

// Bisects gamma in [0, 1] for a zero of the difference minus - plus, which has
// sign s0 at gamma = 0 and the opposite sign at gamma = 1.
SplitPoint bisect_gamma(Index zeta, const std::function<CurvePair(double)>& curves) {
    auto diff = [](const CurvePair& c) { return c.minus - c.plus; };
    auto done = [](const CurvePair& c) {
        return std::abs(c.minus - c.plus) <= kCrossingRelTol * std::max(c.minus, c.plus);
    };
    CurvePair c0 = curves(0.0);
    CurvePair c1 = curves(1.0);
    if (done(c0)) return {zeta, 0.0, c0.minus, c0.plus};
    if (done(c1)) return {zeta, 1.0, c1.minus, c1.plus};
    const bool rising = diff(c0) < 0.0;
    require(rising ? diff(c1) > 0.0 : diff(c1) < 0.0, ErrorKind::Degenerate,
            "crossing search: curves do not bracket a sign change");
    double lo = 0.0;
    double hi = 1.0;
    SplitPoint best{zeta, 0.0, c0.minus, c0.plus};
    double best_gap = std::abs(diff(c0));
    if (std::abs(diff(c1)) < best_gap) {
        best = {zeta, 1.0, c1.minus, c1.plus};
        best_gap = std::abs(diff(c1));
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const CurvePair c = curves(mid);
        const double g = diff(c);
        if (std::abs(g) < best_gap) {
            best = {zeta, mid, c.minus, c.plus};
            best_gap = std::abs(g);
        }
        if (done(c)) break;
        if ((g < 0.0) == rising)
            lo = mid;
        else
            hi = mid;
    }
    return best;
}

// Running sums of u and v_hat from either end. Sums over interior windows are
// accumulated inside the loops that need them.
struct Sums {
    const WeightedInterval& w;
    std::vector<double> pu, pv, su, sv;

    explicit Sums(const WeightedInterval& interval)
        : w(interval),
          pu(prefix_sums(interval.u())),
          pv(prefix_sums(interval.v_hat())),
          su(suffix_sums(interval.u())),
          sv(suffix_sums(interval.v_hat())) {}

    // sum over [first, n] and [n, last]
    [[nodiscard]] double u_head(Index n) const { return pu[at(w, n) + 1]; }
    [[nodiscard]] double v_head(Index n) const { return pv[at(w, n) + 1]; }
    [[nodiscard]] double u_tail(Index n) const { return su[at(w, n)]; }
    [[nodiscard]] double v_tail(Index n) const { return sv[at(w, n)]; }
    [[nodiscard]] double u(Index n) const { return w.u()[at(w, n)]; }
    [[nodiscard]] double v(Index n) const { return w.v_hat()[at(w, n)]; }
};

CurvePair dd_curves(const Sums& s, const Exponents& e, Index zeta, double gamma) {
    const WeightedInterval& w = s.w;
    const double iq = 1.0 / e.q();
    const double ip = 1.0 / e.p_star();
    const double uz = w.u_at(zeta);
    double minus = 0.0;
    double window = 0.0;  // sum_{n}^{zeta-1} u
    for (Index n = zeta; n >= w.first(); --n) {
        if (n < zeta) window += s.u(n);
        minus = std::max(minus, std::pow(s.v_head(n), ip) * std::pow(window + (1.0 - gamma) * uz, iq));
    }
    double plus = 0.0;
    window = 0.0;  // sum_{zeta+1}^{n-1} u
    for (Index n = zeta + 1; n <= w.last(); ++n) {
        if (n > zeta + 1) window += s.u(n - 1);
        plus = std::max(plus, std::pow(window + gamma * uz, iq) * std::pow(s.v_tail(n), ip));
    }
    return {minus, plus};
}

CurvePair nn_curves(const Sums& s, const Exponents& e, Index zeta, double gamma) {
    const WeightedInterval& w = s.w;
    const double iq = 1.0 / e.q();
    const double ip = 1.0 / e.p_star();
    const double vz = w.v_hat_at(zeta);
    double minus = 0.0;
    double window = 0.0;  // sum_{n+1}^{zeta-1} v_hat
    for (Index n = zeta - 1; n >= w.first(); --n) {
        if (n < zeta - 1) window += s.v(n + 1);
        minus = std::max(minus, std::pow(s.u_head(n), iq) * std::pow(window + gamma * vz, ip));
    }
    double plus = 0.0;
    window = 0.0;  // sum_{zeta+1}^{n} v_hat
    for (Index n = zeta; n <= w.last(); ++n) {
        if (n > zeta) window += s.v(n);
        plus = std::max(plus, std::pow(window + (1.0 - gamma) * vz, ip) * std::pow(s.u_tail(n), iq));
    }
    return {minus, plus};
}

// inner_minus[n] = sum_{max(n, x)+1}^{zeta-1} v_hat for n <= zeta-1,
// inner_plus[n] = sum_{zeta+1}^{min(y, n)} v_hat for n >= zeta.
struct CWindows {
    std::vector<double> minus;
    std::vector<double> plus;
};

CWindows c_windows(const Sums& s, Index x, Index y, Index zeta) {
    const WeightedInterval& w = s.w;
    CWindows cw;
    cw.minus.assign(static_cast<std::size_t>(zeta - w.first()), 0.0);
    double acc = 0.0;
    for (Index n = zeta - 1; n >= w.first(); --n) {
        if (n < zeta - 1 && n >= x) acc += s.v(n + 1);
        cw.minus[at(w, n)] = acc;
    }
    cw.plus.assign(static_cast<std::size_t>(w.last() - zeta + 1), 0.0);
    acc = 0.0;
    for (Index n = zeta; n <= w.last(); ++n) {
        if (n > zeta && n <= y) acc += s.v(n);
        cw.plus[static_cast<std::size_t>(n - zeta)] = acc;
    }
    return cw;
}

CurvePair c_curves(const Sums& s, const Exponents& e, Index x, Index y, Index zeta, double gamma) {
    const WeightedInterval& w = s.w;
    const double r = e.q() - 1.0;
    const double vz = w.v_hat_at(zeta);
    const CWindows cw = c_windows(s, x, y, zeta);
    std::vector<double> terms;
    for (Index n = w.first(); n <= zeta - 1; ++n) {
        const double inner = std::max(n, x) + 1 <= zeta ? cw.minus[at(w, n)] + gamma * vz : 0.0;
        terms.push_back(w.u_at(n) * abs_pow(inner, r));
    }
    const double minus = pairwise_sum(terms);
    terms.clear();
    for (Index n = zeta; n <= w.last(); ++n) {
        const double inner = (1.0 - gamma) * vz + cw.plus[static_cast<std::size_t>(n - zeta)];
        terms.push_back(w.u_at(n) * abs_pow(inner, r));
    }
    return {minus, pairwise_sum(terms)};
}

void require_dd_sequence(const Sequence& x) {
    require(!x.empty(), ErrorKind::InvalidArgument, "DD sequence is empty");
    require(x[x.last()] == 0.0, ErrorKind::InvalidArgument, "DD sequence needs x_N = 0");
}

}  // namespace

// ---- DD ----

SplitFamilies dd_split_weights(const WeightedInterval& w, Index zeta, double gamma) {
    require_zeta(zeta, w.first() + 1, w.last() - 1, "dd_split_weights");
    require_gamma(gamma);
    const auto u = w.u();
    const auto v = w.v();
    const std::size_t z = at(w, zeta);

    std::vector<double> ul(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(z + 1));
    std::vector<double> vl(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(z + 1));
    ul.back() = (1.0 - gamma) * u[z];

    std::vector<double> ur{gamma * u[z]};
    ur.insert(ur.end(), u.begin() + static_cast<std::ptrdiff_t>(z + 1), u.end());
    std::vector<double> vr(v.begin() + static_cast<std::ptrdiff_t>(z + 1), v.end());
    vr.push_back(v.back());

    return {WeightedInterval(w.first(), std::move(ul), std::move(vl), w.p(), WeightCheck::NonNegative),
            WeightedInterval(zeta + 1, std::move(ur), std::move(vr), w.p(), WeightCheck::NonNegative)};
}

SplitSequences dd_split_sequences(const Sequence& x, Index zeta) {
    require_dd_sequence(x);
    require_zeta(zeta, x.first() + 1, x.last() - 1, "dd_split_sequences");
    const auto xs = x.values();
    const auto z = static_cast<std::size_t>(zeta - x.first());
    std::vector<double> minus(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(z + 1));
    std::vector<double> plus(xs.begin() + static_cast<std::ptrdiff_t>(z), xs.end());
    return {Sequence(x.first(), std::move(minus), LeftBoundary::DirichletZero, RightBoundary::Free),
            Sequence(zeta + 1, std::move(plus), LeftBoundary::Free, RightBoundary::DirichletZero)};
}

SplitIdentity dd_split_identities(const WeightedInterval& w, const Exponents& e, const Sequence& x,
                                  Index zeta, double gamma) {
    require(x.spans(w), ErrorKind::InvalidArgument, "sequence and weights cover different intervals");
    w.require_compatible(e);
    const auto fam = dd_split_weights(w, zeta, gamma);
    const auto seq = dd_split_sequences(x, zeta);
    const double p = e.p();
    const double q = e.q();
    const Sequence xd = x.with_boundaries(LeftBoundary::DirichletZero, RightBoundary::Free);

    SplitIdentity r{};
    r.norm_whole = std::pow(lq_norm(xd, w, e), q);
    r.energy_whole = std::pow(backward_energy(xd, w, e), p);

    std::vector<double> terms;
    for (Index n = fam.left.first(); n <= fam.left.last(); ++n)
        terms.push_back(fam.left.u_at(n) * abs_pow(seq.minus[n], q));
    for (Index n = fam.right.first(); n <= fam.right.last(); ++n)
        terms.push_back(fam.right.u_at(n) * abs_pow(seq.plus[n], q));
    r.norm_split = pairwise_sum(terms);

    terms.clear();
    for (Index n = w.first(); n <= zeta; ++n)
        terms.push_back(w.v_at(n) * abs_pow(seq.minus[n] - seq.minus.at(n - 1), p));
    for (Index n = zeta + 1; n <= w.last(); ++n)
        terms.push_back(w.v_at(n) * abs_pow(seq.plus[n] - seq.plus[n + 1], p));
    r.energy_split = pairwise_sum(terms);
    return r;
}

CurvePair dd_b_curves(const WeightedInterval& w, const Exponents& e, Index zeta, double gamma) {
    w.require_compatible(e);
    require_zeta(zeta, w.first(), w.last(), "dd_b_curves");
    require_gamma(gamma);
    return dd_curves(Sums(w), e, zeta, gamma);
}

SplitPoint dd_find_crossing(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require(w.size() >= 2, ErrorKind::Degenerate, "dd_find_crossing needs at least two points");
    const Sums s(w);
    // B-(-M, 1) = 0, so some zeta satisfies B+(zeta, 1) >= B-(zeta, 1); take the largest.
    Index zbar = w.first();
    for (Index z = w.last(); z >= w.first(); --z) {
        const CurvePair c = dd_curves(s, e, z, 1.0);
        if (c.plus >= c.minus) {
            zbar = z;
            break;
        }
    }
    return bisect_gamma(zbar, [&](double g) { return dd_curves(s, e, zbar, g); });
}

Sequence dd_witness(const WeightedInterval& w, const Exponents& e, Index x, Index y) {
    w.require_compatible(e);
    require_pair(w, x, y);
    const Sums s(w);
    const double a = s.v_head(x);
    const double b = s.v_tail(y);
    const double c = b / a;
    // The (N+2)-point sequence collapses at zeta = x: slots after x read one ahead.
    auto tilde = [&](Index n) {
        if (n <= x) return c * s.v_head(n);
        if (n < y + 1) return b;
        return s.v_tail(n);
    };
    std::vector<double> values(w.size());
    for (Index n = w.first(); n <= w.last(); ++n) values[at(w, n)] = n <= x ? tilde(n) : tilde(n + 1);
    values.back() = 0.0;
    return Sequence(w.first(), std::move(values), LeftBoundary::DirichletZero, RightBoundary::Free);
}

// ---- NN ----

SplitFamilies nn_split_weights(const WeightedInterval& w, const Exponents& e, Index zeta, double gamma) {
    w.require_compatible(e);
    require_zeta(zeta, w.first() + 1, w.last(), "nn_split_weights");
    require_gamma(gamma);
    const auto u = w.u();
    const auto vh = w.v_hat();
    const std::size_t z = at(w, zeta);

    std::vector<double> ul(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(z));
    std::vector<double> hl(vh.begin() + 1, vh.begin() + static_cast<std::ptrdiff_t>(z + 1));
    hl.back() = gamma * vh[z];

    std::vector<double> ur(u.begin() + static_cast<std::ptrdiff_t>(z), u.end());
    std::vector<double> hr(vh.begin() + static_cast<std::ptrdiff_t>(z), vh.end());
    hr.front() = (1.0 - gamma) * vh[z];

    return {WeightedInterval::from_hat(w.first() + 1, std::move(ul), std::move(hl), w.p(), WeightCheck::NonNegative),
            WeightedInterval::from_hat(zeta, std::move(ur), std::move(hr), w.p(), WeightCheck::NonNegative)};
}

SplitSequences nn_split_sequences(const Sequence& x, Index zeta, double gamma) {
    require_zeta(zeta, x.first() + 1, x.last(), "nn_split_sequences");
    require_gamma(gamma);
    const auto xs = x.values();
    const auto z = static_cast<std::size_t>(zeta - x.first());
    const double node = (1.0 - gamma) * xs[z - 1] + gamma * xs[z];

    std::vector<double> minus(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(z));
    minus.push_back(node);
    std::vector<double> plus{node};
    plus.insert(plus.end(), xs.begin() + static_cast<std::ptrdiff_t>(z), xs.end());
    return {Sequence(x.first() + 1, std::move(minus)), Sequence(zeta - 1, std::move(plus))};
}

SplitIdentity nn_split_identities(const WeightedInterval& w, const Exponents& e, const Sequence& x,
                                  Index zeta, double gamma) {
    require(x.spans(w), ErrorKind::InvalidArgument, "sequence and weights cover different intervals");
    const auto fam = nn_split_weights(w, e, zeta, gamma);
    const auto seq = nn_split_sequences(x, zeta, gamma);
    const double p = e.p();
    const double q = e.q();
    const double m = solve_m(x, w, e).m;
    const Sequence xn = x.with_boundaries(LeftBoundary::NeumannCopy, RightBoundary::Free);

    SplitIdentity r{};
    r.norm_whole = std::pow(lq_norm(xn, w, e, m), q);
    r.energy_whole = std::pow(backward_energy(xn, w, e), p);

    std::vector<double> terms;
    for (Index n = fam.left.first(); n <= fam.left.last(); ++n)
        terms.push_back(fam.left.u_at(n) * abs_pow(seq.minus[n] - m, q));
    for (Index n = fam.right.first(); n <= fam.right.last(); ++n)
        terms.push_back(fam.right.u_at(n) * abs_pow(seq.plus[n] - m, q));
    r.norm_split = pairwise_sum(terms);

    terms.clear();
    for (Index n = fam.left.first(); n <= fam.left.last(); ++n)
        terms.push_back(hat_energy_term(fam.left.v_hat_at(n), seq.minus[n] - seq.minus[n + 1], p));
    for (Index n = fam.right.first(); n <= fam.right.last(); ++n)
        terms.push_back(hat_energy_term(fam.right.v_hat_at(n), seq.plus[n] - seq.plus[n - 1], p));
    r.energy_split = pairwise_sum(terms);
    return r;
}

CurvePair nn_b_curves(const WeightedInterval& w, const Exponents& e, Index zeta, double gamma) {
    w.require_compatible(e);
    require_zeta(zeta, w.first(), w.last(), "nn_b_curves");
    require_gamma(gamma);
    return nn_curves(Sums(w), e, zeta, gamma);
}

CurvePair nn_c_curves(const WeightedInterval& w, const Exponents& e, Index x, Index y, Index zeta,
                      double gamma) {
    w.require_compatible(e);
    require_pair(w, x, y);
    require_zeta(zeta, x + 1, y, "nn_c_curves");
    require_gamma(gamma);
    return c_curves(Sums(w), e, x, y, zeta, gamma);
}

SplitPoint nn_find_crossing_C(const WeightedInterval& w, const Exponents& e, Index x, Index y) {
    w.require_compatible(e);
    require_pair(w, x, y);
    const Sums s(w);
    // C+(y, 1) = 0, so the set below is nonempty; at its minimum the gamma = 0
    // end reads C-(zbar - 1, 1) - C+(zbar - 1, 1) < 0, or C-(x+1, 0) = 0.
    Index zbar = y;
    for (Index z = x + 1; z <= y; ++z) {
        const CurvePair c = c_curves(s, e, x, y, z, 1.0);
        if (c.minus >= c.plus) {
            zbar = z;
            break;
        }
    }
    const CurvePair c1 = c_curves(s, e, x, y, zbar, 1.0);
    require(c1.minus > 0.0 || c1.plus > 0.0, ErrorKind::Degenerate, "C-curves vanish identically");
    return bisect_gamma(zbar, [&](double g) { return c_curves(s, e, x, y, zbar, g); });
}

SplitPoint nn_find_crossing(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require(w.size() >= 2, ErrorKind::Degenerate, "nn_find_crossing needs at least two points");
    const Sums s(w);
    // B+(N, 1) = 0, so the smallest zeta with B-(zeta, 1) >= B+(zeta, 1) exists.
    Index zbar = w.last();
    for (Index z = w.first(); z <= w.last(); ++z) {
        const CurvePair c = nn_curves(s, e, z, 1.0);
        if (c.minus >= c.plus) {
            zbar = z;
            break;
        }
    }
    require(zbar > w.first(), ErrorKind::Degenerate, "NN curves cross at the left end");
    return bisect_gamma(zbar, [&](double g) { return nn_curves(s, e, zbar, g); });
}

Sequence nn_witness(const WeightedInterval& w, const Exponents& e, Index x, Index y) {
    const SplitPoint sp = nn_find_crossing_C(w, e, x, y);
    const Sums s(w);
    const Index zeta = sp.zeta;
    const double g = sp.gamma;
    const double vz = w.v_hat_at(zeta);
    const CWindows cw = c_windows(s, x, y, zeta);
    std::vector<double> values(w.size());
    for (Index n = w.first(); n <= w.last(); ++n) {
        if (n <= zeta - 1)
            values[at(w, n)] = -(cw.minus[at(w, n)] + g * vz);
        else
            values[at(w, n)] = (1.0 - g) * vz + cw.plus[static_cast<std::size_t>(n - zeta)];
    }
    return Sequence(w.first(), std::move(values), LeftBoundary::NeumannCopy, RightBoundary::Free);
}

}  // namespace hardy
