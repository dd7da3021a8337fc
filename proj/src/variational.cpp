#include "hardy/variational.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <limits>
#include <random>
#include <vector>

#include "hardy/bounds.hpp"
#include "hardy/error.hpp"
#include "hardy/meanzero.hpp"
#include "hardy/splitting.hpp"
#include "hardy/summation.hpp"
#include "hardy/tridiagonal.hpp"

namespace hardy {

namespace {

using Vec = std::vector<double>;

Sequence dd_full(const Sequence& x, const WeightedInterval& w) {
    require(x.first() == w.first(), ErrorKind::InvalidArgument, "DD sequence starts at the wrong index");
    if (x.size() + 1 == w.size()) {
        Vec values(x.values().begin(), x.values().end());
        values.push_back(0.0);
        return Sequence(x.first(), std::move(values), LeftBoundary::DirichletZero, RightBoundary::Free);
    }
    require(x.size() == w.size(), ErrorKind::InvalidArgument, "DD sequence has the wrong length");
    require(x[x.last()] == 0.0, ErrorKind::InvalidArgument, "DD sequence needs x_N = 0");
    return x.with_boundaries(LeftBoundary::DirichletZero, RightBoundary::Free);
}

// ---------------------------------------------------------------------------
// Flux coordinates: the differences of x are d = c * e with c = v^(-1/p), so the
// energy is sum |e|^p. x is rebuilt from d by a prefix or suffix sum.

double smooth_pow(double t, double r, double eps) {
    if (eps == 0.0) return abs_pow(t, r);
    return std::pow(t * t + eps * eps, 0.5 * r);
}

// d/dt smooth_pow
double smooth_dpow(double t, double r, double eps) {
    if (eps == 0.0) return r * signed_pow(t, r - 1.0);
    return r * t * std::pow(t * t + eps * eps, 0.5 * r - 1.0);
}

class Flux {
public:
    Flux(BoundaryCase c, const WeightedInterval& w, const Exponents& e)
        : case_(c), p_(e.p()), q_(e.q()), u_(w.u().begin(), w.u().end()) {
        const auto v = w.v();
        const std::size_t L = w.size();
        if (c == BoundaryCase::NN) {
            c_.resize(L - 1);
            for (std::size_t k = 0; k + 1 < L; ++k) c_[k] = std::pow(v[k + 1], -1.0 / p_);
        } else {
            c_.resize(L);
            for (std::size_t k = 0; k < L; ++k) c_[k] = std::pow(v[k], -1.0 / p_);
        }
        double cc = 0.0;
        for (double t : c_) cc += t * t;
        cc_ = cc;
    }

    [[nodiscard]] std::size_t dim() const { return c_.size(); }
    [[nodiscard]] std::size_t nodes() const { return u_.size(); }

    // x from e
    void build(const Vec& e, Vec& x) const {
        const std::size_t L = nodes();
        x.assign(L, 0.0);
        double run = 0.0;
        switch (case_) {
            case BoundaryCase::DN:
            case BoundaryCase::DD:
                for (std::size_t k = 0; k < L; ++k) x[k] = run += c_[k] * e[k];
                if (case_ == BoundaryCase::DD) x[L - 1] = 0.0;
                break;
            case BoundaryCase::ND:
                for (std::size_t k = L; k-- > 0;) x[k] = run += c_[k] * e[k];
                break;
            case BoundaryCase::NN:
                for (std::size_t k = 0; k + 1 < L; ++k) x[k + 1] = run += c_[k] * e[k];
                break;
        }
    }

    // e from x (seed conversion); x on all nodes, DD with x_N = 0.
    [[nodiscard]] Vec flux_of(const Vec& x) const {
        const std::size_t L = nodes();
        Vec e(dim());
        switch (case_) {
            case BoundaryCase::DN:
            case BoundaryCase::DD:
                for (std::size_t k = 0; k < L; ++k) e[k] = (x[k] - (k ? x[k - 1] : 0.0)) / c_[k];
                break;
            case BoundaryCase::ND:
                for (std::size_t k = 0; k < L; ++k) e[k] = (x[k] - (k + 1 < L ? x[k + 1] : 0.0)) / c_[k];
                break;
            case BoundaryCase::NN:
                for (std::size_t k = 0; k + 1 < L; ++k) e[k] = (x[k + 1] - x[k]) / c_[k];
                break;
        }
        project(e);
        return e;
    }

    // Keeps DD iterates on sum c e = 0.
    void project(Vec& g) const {
        if (case_ != BoundaryCase::DD) return;
        double dot = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) dot += c_[k] * g[k];
        const double f = dot / cc_;
        for (std::size_t k = 0; k < g.size(); ++k) g[k] -= f * c_[k];
    }

    // Mean-like constant of the (possibly smoothed) numerator.
    [[nodiscard]] double centre(const Vec& x, double eps) const {
        if (case_ != BoundaryCase::NN) return 0.0;
        if (eps == 0.0) return solve_m(x, u_, q_).m;
        auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
        double lo = *lo_it;
        double hi = *hi_it;
        auto f = [&](double t) {
            double s = 0.0;
            for (std::size_t n = 0; n < x.size(); ++n) s += u_[n] * smooth_dpow(x[n] - t, q_, eps);
            return s;
        };
        for (int it = 0; it < 200 && hi > lo; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (f(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    struct Eval {
        double j;      // log ratio
        double num;
        double energy;
    };

    // Log ratio (1/q) log Num - (1/p) log E and, when grad != nullptr, its gradient.
    Eval evaluate(const Vec& e, double eps_x, double eps_e, Vec* grad) const {
        build(e, x_);
        const double m = centre(x_, eps_x);
        const std::size_t L = nodes();
        terms_.resize(std::max(L, dim()));
        for (std::size_t n = 0; n < L; ++n) terms_[n] = u_[n] * smooth_pow(x_[n] - m, q_, eps_x);
        const double num = pairwise_sum(std::span<const double>(terms_.data(), L));
        for (std::size_t k = 0; k < dim(); ++k) terms_[k] = smooth_pow(e[k], p_, eps_e);
        const double energy = pairwise_sum(std::span<const double>(terms_.data(), dim()));
        Eval out{std::log(num) / q_ - std::log(energy) / p_, num, energy};
        if (!std::isfinite(out.j)) out.j = -std::numeric_limits<double>::infinity();
        if (grad == nullptr || !(num > 0.0) || !(energy > 0.0)) return out;

        gx_.resize(L);
        for (std::size_t n = 0; n < L; ++n) gx_[n] = u_[n] * smooth_dpow(x_[n] - m, q_, eps_x);
        if (case_ == BoundaryCase::DD) gx_[L - 1] = 0.0;
        grad->assign(dim(), 0.0);
        double run = 0.0;
        switch (case_) {
            case BoundaryCase::DN:
            case BoundaryCase::DD:
                for (std::size_t k = L; k-- > 0;) (*grad)[k] = run += gx_[k];
                break;
            case BoundaryCase::ND:
                for (std::size_t k = 0; k < L; ++k) (*grad)[k] = run += gx_[k];
                break;
            case BoundaryCase::NN:
                for (std::size_t k = L - 1; k-- > 0;) (*grad)[k] = run += gx_[k + 1];
                break;
        }
        for (std::size_t k = 0; k < dim(); ++k)
            (*grad)[k] = c_[k] * (*grad)[k] / (q_ * num) - smooth_dpow(e[k], p_, eps_e) / (p_ * energy);
        project(*grad);
        return out;
    }

    // Rescales e so that the exact energy is 1; returns the factor divided out.
    double normalise(Vec& e) const {
        double s = 0.0;
        for (double t : e) s += abs_pow(t, p_);
        const double t = std::pow(s, 1.0 / p_);
        if (t > 0.0 && std::isfinite(t))
            for (double& v : e) v /= t;
        return t;
    }

    [[nodiscard]] double p() const { return p_; }
    [[nodiscard]] double q() const { return q_; }

private:
    BoundaryCase case_;
    double p_;
    double q_;
    Vec u_;
    Vec c_;
    double cc_ = 1.0;
    // Scratch space: a Flux must not be shared between threads.
    mutable Vec x_;
    mutable Vec gx_;
    mutable Vec terms_;
};

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double rms(const Vec& a) {
    if (a.empty()) return 0.0;
    return std::sqrt(dot(a, a) / static_cast<double>(a.size()));
}

struct RunResult {
    Vec e;
    double j = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

// Maximises the (smoothed) log ratio from e by L-BFGS with Armijo backtracking.
RunResult ascend(const Flux& flux, Vec e, double eps_x, double eps_e, const EstimateConfig& cfg) {
    const std::size_t n = e.size();
    struct Pair {
        Vec s;
        Vec y;
        double rho;
    };
    std::deque<Pair> memory;
    Vec g(n), g_new(n), dir(n), trial(n), alpha(static_cast<std::size_t>(cfg.memory));
    flux.normalise(e);
    auto cur = flux.evaluate(e, eps_x, eps_e, &g);
    RunResult out;
    int small_gains = 0;
    bool reset_once = false;
    for (int it = 0; it < cfg.max_iterations; ++it) {
        out.iterations = it + 1;
        // Two-loop recursion on f = -J; dir ends up as an ascent direction for J.
        dir = g;
        std::size_t k = 0;
        for (auto p = memory.rbegin(); p != memory.rend(); ++p, ++k) {
            alpha[k] = p->rho * dot(p->s, dir);
            for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha[k] * p->y[i];
        }
        double initial = 1.0;
        if (!memory.empty()) {
            const auto& last = memory.back();
            const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
            for (double& t : dir) t *= gamma;
        } else {
            const double gn = std::sqrt(dot(g, g));
            const double en = std::sqrt(dot(e, e));
            initial = gn > 0.0 ? 0.1 * en / gn : 1.0;
        }
        for (auto p = memory.begin(); p != memory.end(); ++p) {
            --k;
            const double beta = p->rho * dot(p->y, dir);
            for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha[k] - beta) * p->s[i];
        }
        flux.project(dir);
        double slope = dot(g, dir);
        if (!(slope > 0.0)) {
            memory.clear();
            dir = g;
            slope = dot(g, dir);
            const double gn = std::sqrt(slope);
            initial = gn > 0.0 ? 0.1 * std::sqrt(dot(e, e)) / gn : 1.0;
            if (!(slope > 0.0)) {
                out.converged = true;
                break;
            }
        }

        double step = initial;
        bool accepted = false;
        Flux::Eval next{};
        for (int h = 0; h <= 40; ++h) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = e[i] + step * dir[i];
            next = flux.evaluate(trial, eps_x, eps_e, &g_new);
            if (next.j >= cur.j + 1e-4 * step * slope && std::isfinite(next.j)) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (memory.empty() || reset_once) {
                out.converged = true;
                break;
            }
            memory.clear();
            reset_once = true;
            continue;
        }
        reset_once = false;

        Pair pr{Vec(n), Vec(n), 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            pr.s[i] = trial[i] - e[i];
            pr.y[i] = g[i] - g_new[i];
        }
        const double sy = dot(pr.s, pr.y);
        // The log ratio is scale invariant: dividing the iterate by t scales
        // the stored steps by 1/t and the gradient differences by t.
        const double t = flux.normalise(trial);
        for (double& v : g_new) v *= t;
        auto rescale = [t](Pair& q) {
            for (double& v : q.s) v /= t;
            for (double& v : q.y) v *= t;
        };
        if (sy > 1e-12 * std::sqrt(dot(pr.s, pr.s) * dot(pr.y, pr.y))) {
            pr.rho = 1.0 / sy;
            memory.push_back(std::move(pr));
            if (memory.size() > static_cast<std::size_t>(cfg.memory)) memory.pop_front();
        }
        for (auto& q : memory) rescale(q);

        const double gain = next.j - cur.j;
        e.swap(trial);
        g.swap(g_new);
        cur = next;
        small_gains = gain < cfg.rel_tol ? small_gains + 1 : 0;
        if (small_gains >= 2) {
            out.converged = true;
            break;
        }
    }
    out.j = cur.j;
    out.e = std::move(e);
    return out;
}

RunResult optimise(const Flux& flux, Vec e, const EstimateConfig& cfg) {
    const bool smooth = cfg.smoothing && std::min(flux.p(), flux.q()) < 2.0;
    int total = 0;
    flux.normalise(e);
    if (smooth) {
        for (double eps = 1e-3; eps >= 1e-10 * 0.99; eps *= 0.1) {
            Vec x;
            flux.build(e, x);
            const double m = flux.centre(x, 0.0);
            for (double& t : x) t -= m;
            const double ex = eps * std::max(rms(x), std::numeric_limits<double>::min());
            const double ee = eps * std::max(rms(e), std::numeric_limits<double>::min());
            auto r = ascend(flux, std::move(e), ex, ee, cfg);
            total += r.iterations;
            e = std::move(r.e);
        }
    }
    auto r = ascend(flux, std::move(e), 0.0, 0.0, cfg);
    r.iterations += total;
    return r;
}

Sequence to_sequence(BoundaryCase c, const Flux& flux, const Vec& e, Index first) {
    Vec x;
    flux.build(e, x);
    switch (c) {
        case BoundaryCase::ND: return Sequence(first, std::move(x), LeftBoundary::Free, RightBoundary::DirichletZero);
        case BoundaryCase::DN: return Sequence(first, std::move(x), LeftBoundary::DirichletZero, RightBoundary::Free);
        case BoundaryCase::DD: return Sequence(first, std::move(x), LeftBoundary::DirichletZero, RightBoundary::Free);
        case BoundaryCase::NN: return Sequence(first, std::move(x), LeftBoundary::NeumannCopy, RightBoundary::Free);
    }
    fail(ErrorKind::InvalidArgument, "unknown boundary case");
}

// Structured seeds: canonical one-sided sequences for ND/DN, the pair
// witnesses for DD/NN.
std::vector<Vec> structured_seeds(BoundaryCase c, const WeightedInterval& w, const Exponents& e) {
    std::vector<Vec> seeds;
    const auto vh = w.v_hat();
    const std::size_t L = w.size();
    auto canonical = [&](Index n0, bool nd) {
        Vec x(L);
        const auto k0 = static_cast<std::size_t>(n0 - w.first());
        if (nd) {
            double run = 0.0;
            for (std::size_t k = L; k-- > 0;) {
                if (k >= k0) run += vh[k];
                x[k] = run;
            }
        } else {
            double run = 0.0;
            for (std::size_t k = 0; k < L; ++k) {
                if (k <= k0) run += vh[k];
                x[k] = run;
            }
        }
        return x;
    };
    switch (c) {
        case BoundaryCase::ND: {
            const SupResult b = b_nd(w, e);
            seeds.push_back(canonical(b.x, true));
            if (b.x != w.first()) seeds.push_back(canonical(w.first(), true));
            break;
        }
        case BoundaryCase::DN: {
            const SupResult b = b_dn(w, e);
            seeds.push_back(canonical(b.x, false));
            if (b.x != w.last()) seeds.push_back(canonical(w.last(), false));
            break;
        }
        case BoundaryCase::DD: {
            const SupResult b = b_dd_lower(w, e);
            const Sequence s = dd_witness(w, e, b.x, b.y);
            seeds.emplace_back(s.values().begin(), s.values().end());
            break;
        }
        case BoundaryCase::NN: {
            const SupResult b = b_nn_lower(w, e);
            const Sequence s = nn_witness(w, e, b.x, b.y);
            seeds.emplace_back(s.values().begin(), s.values().end());
            break;
        }
    }
    return seeds;
}

Vec random_flux(BoundaryCase c, std::size_t dim, std::uint64_t seed, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    // One-signed increments suit the monotone extremals of ND, DN and NN.
    std::uniform_real_distribution<double> dist(c == BoundaryCase::DD ? -1.0 : 0.05, 1.0);
    Vec e(dim);
    for (double& t : e) t = dist(rng);
    return e;
}

}  // namespace

double ratio(BoundaryCase c, const Sequence& x, const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    double num = 0.0;
    double den = 0.0;
    switch (c) {
        case BoundaryCase::ND: {
            const Sequence s = x.with_boundaries(LeftBoundary::Free, RightBoundary::DirichletZero);
            num = lq_norm(s, w, e);
            den = forward_energy(s, w, e);
            break;
        }
        case BoundaryCase::DN: {
            const Sequence s = x.with_boundaries(LeftBoundary::DirichletZero, RightBoundary::Free);
            num = lq_norm(s, w, e);
            den = backward_energy(s, w, e);
            break;
        }
        case BoundaryCase::DD: {
            const Sequence s = dd_full(x, w);
            num = lq_norm(s, w, e);
            den = backward_energy(s, w, e);
            break;
        }
        case BoundaryCase::NN: {
            const Sequence s = x.with_boundaries(LeftBoundary::NeumannCopy, RightBoundary::Free);
            num = lq_norm(s, w, e, solve_m(s, w, e).m);
            den = backward_energy(s, w, e);
            break;
        }
    }
    require(den > 0.0, ErrorKind::Degenerate, "ratio: the energy of x vanishes");
    return num / den;
}

EstimateResult estimate_A(BoundaryCase c, const WeightedInterval& w, const Exponents& e,
                          const EstimateConfig& config) {
    w.require_compatible(e);
    require(config.restarts >= 0 && config.max_iterations > 0 && config.memory > 0,
            ErrorKind::InvalidArgument, "estimate_A: bad configuration");
    if (c == BoundaryCase::DD || c == BoundaryCase::NN)
        require(w.size() >= 2, ErrorKind::Degenerate, "DD and NN need at least two points");
    const Flux flux(c, w, e);

    std::vector<Vec> starts;
    for (const Vec& x : structured_seeds(c, w, e)) starts.push_back(flux.flux_of(x));
    const std::size_t structured = starts.size();
    for (int r = 0; r < config.restarts; ++r) starts.push_back(random_flux(c, flux.dim(), config.seed, r));

    auto run = [&](std::size_t i) {
        const Flux local = flux;
        RunResult r = optimise(local, starts[i], config);
        // The seed itself stays a candidate: smoothing phases may drift below it.
        Vec seed = starts[i];
        local.normalise(seed);
        const auto at_seed = local.evaluate(seed, 0.0, 0.0, nullptr);
        if (at_seed.j > r.j) {
            r.e = std::move(seed);
            r.j = at_seed.j;
        }
        return r;
    };

    std::vector<RunResult> results(starts.size());
    if (config.parallel && starts.size() > 1) {
        std::vector<std::future<RunResult>> jobs;
        for (std::size_t i = 0; i < starts.size(); ++i) jobs.push_back(std::async(std::launch::async, run, i));
        for (std::size_t i = 0; i < starts.size(); ++i) results[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < starts.size(); ++i) results[i] = run(i);
    }

    EstimateResult out;
    out.restarts = static_cast<int>(starts.size() - structured);
    double best = -1.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        out.iterations += results[i].iterations;
        const Sequence x = to_sequence(c, flux, results[i].e, w.first());
        double value = -1.0;
        try {
            value = ratio(c, x, w, e);
        } catch (const Error&) {
            continue;
        }
        if (value > best) {
            best = value;
            out.maximizer = x;
            out.converged = results[i].converged;
        }
    }
    require(best > 0.0, ErrorKind::Degenerate, "estimate_A: every seed is degenerate");
    out.a_hat = best;
    if (config.oracle) out.oracle_value = eigen_oracle(c, w);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

PathProblem path_problem(BoundaryCase c, const WeightedInterval& w) {
    const auto u = w.u();
    const auto v = w.v();
    const std::size_t L = w.size();
    PathProblem pp;
    switch (c) {
        case BoundaryCase::ND:
            pp.mass.assign(u.begin(), u.end());
            pp.edge.assign(v.begin(), v.end() - 1);
            pp.ground_right = v[L - 1];
            break;
        case BoundaryCase::DN:
            pp.mass.assign(u.begin(), u.end());
            pp.edge.assign(v.begin() + 1, v.end());
            pp.ground_left = v[0];
            break;
        case BoundaryCase::DD:
            require(L >= 2, ErrorKind::Degenerate, "DD needs at least two points");
            pp.mass.assign(u.begin(), u.end() - 1);
            pp.edge.assign(v.begin() + 1, v.end() - 1);
            pp.ground_left = v[0];
            pp.ground_right = v[L - 1];
            break;
        case BoundaryCase::NN:
            require(L >= 2, ErrorKind::Degenerate, "NN needs at least two points");
            pp.mass.assign(u.begin(), u.end());
            pp.edge.assign(v.begin() + 1, v.end());
            break;
    }
    return pp;
}

}  // namespace

OracleResult eigen_oracle_full(BoundaryCase c, const WeightedInterval& w) {
    require(w.p() == 2.0, ErrorKind::InvalidArgument, "eigen oracle needs p = q = 2");
    const EigenPair ep = path_eigenpair(path_problem(c, w));
    require(ep.lambda > 0.0, ErrorKind::NumericFailure, "eigen oracle: nonpositive eigenvalue");
    Vec x = ep.vector;
    LeftBoundary left = LeftBoundary::DirichletZero;
    RightBoundary right = RightBoundary::Free;
    if (c == BoundaryCase::DD) x.push_back(0.0);
    if (c == BoundaryCase::ND) {
        left = LeftBoundary::Free;
        right = RightBoundary::DirichletZero;
    }
    if (c == BoundaryCase::NN) left = LeftBoundary::NeumannCopy;
    return {1.0 / std::sqrt(ep.lambda), ep.lambda, Sequence(w.first(), std::move(x), left, right)};
}

double eigen_oracle(BoundaryCase c, const WeightedInterval& w) { return eigen_oracle_full(c, w).a; }

double characteristic_residual(BoundaryCase c, const Sequence& x, double lambda, const WeightedInterval& w,
                               const Exponents& e) {
    w.require_compatible(e);
    require(e.diagonal(), ErrorKind::InvalidArgument, "characteristic_residual needs p = q");
    const Sequence s = c == BoundaryCase::DD ? dd_full(x, w) : x;
    require(s.spans(w), ErrorKind::InvalidArgument, "sequence and weights cover different intervals");
    const auto xs = s.values();
    const auto u = w.u();
    const auto v = w.v();
    const std::size_t L = w.size();
    const double p = e.p();
    const double m = c == BoundaryCase::NN ? solve_m(s, w, e).m : 0.0;

    Vec r(L, 0.0);
    auto edge = [&](std::size_t a, std::size_t b, double weight) {
        const double f = weight * signed_pow(xs[a] - xs[b], p - 1.0);
        r[a] += f;
        r[b] -= f;
    };
    auto ground = [&](std::size_t a, double weight) { r[a] += weight * signed_pow(xs[a], p - 1.0); };
    switch (c) {
        case BoundaryCase::ND:
            for (std::size_t k = 0; k + 1 < L; ++k) edge(k, k + 1, v[k]);
            ground(L - 1, v[L - 1]);
            break;
        case BoundaryCase::DN:
        case BoundaryCase::DD:
        case BoundaryCase::NN:
            for (std::size_t k = 1; k < L; ++k) edge(k - 1, k, v[k]);
            if (c != BoundaryCase::NN) ground(0, v[0]);
            break;
    }
    const std::size_t free_nodes = c == BoundaryCase::DD ? L - 1 : L;
    double worst = 0.0;
    for (std::size_t n = 0; n < free_nodes; ++n) {
        const double res = r[n] - lambda * u[n] * signed_pow(xs[n] - m, e.q() - 1.0);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace hardy
