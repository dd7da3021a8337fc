#include "hardy/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "hardy/error.hpp"
#include "hardy/summation.hpp"

namespace hardy {

namespace {

// Pair objective in "power" form: D(i, j) * h(left[i], right[j]) with
// D(i, j) = terms[i + shift] + ... + terms[j - 1 + shift], accumulated along
// the row. The constant is the result raised to 1/outer.
enum class Combine { Divide, Power, Min };

struct PairProblem {
    std::vector<double> terms;
    std::size_t shift = 0;
    std::vector<double> left;
    std::vector<double> right;
    Combine combine;
    double power = 0.0;  // S^(-power) for Combine::Power
    double outer = 1.0;
};

constexpr std::size_t kRowsPerTask = 32;
constexpr std::size_t kParallelThreshold = 2048;

void scan_row(const PairProblem& pp, std::size_t i, std::vector<double>& buffer, double& best,
              std::size_t& arg) {
    const std::size_t n = pp.left.size();
    const std::size_t count = n - i - 1;
    buffer.resize(count);
    const double* terms = pp.terms.data() + i + pp.shift;
    const double* right = pp.right.data() + i + 1;
    const double l = pp.left[i];
    double* out = buffer.data();
    double d = 0.0;
    switch (pp.combine) {
        case Combine::Divide:
            for (std::size_t k = 0; k < count; ++k) {
                d += terms[k];
                out[k] = d / (l + right[k]);
            }
            break;
        case Combine::Power:
            for (std::size_t k = 0; k < count; ++k) {
                d += terms[k];
                out[k] = d * std::pow(l + right[k], -pp.power);
            }
            break;
        case Combine::Min:
            for (std::size_t k = 0; k < count; ++k) {
                d += terms[k];
                out[k] = d * std::min(l, right[k]);
            }
            break;
    }
    const auto it = std::max_element(buffer.begin(), buffer.end());
    best = *it;
    arg = i + 1 + static_cast<std::size_t>(it - buffer.begin());
}

SupResult scan_pairs(const PairProblem& pp, Index first) {
    const std::size_t n = pp.left.size();
    const std::size_t rows = n - 1;
    std::vector<double> row_best(rows);
    std::vector<std::size_t> row_arg(rows);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<double> buffer;
        for (;;) {
            const std::size_t start = next.fetch_add(kRowsPerTask);
            if (start >= rows) return;
            const std::size_t stop = std::min(rows, start + kRowsPerTask);
            for (std::size_t i = start; i < stop; ++i) scan_row(pp, i, buffer, row_best[i], row_arg[i]);
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (n < kParallelThreshold || hw == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < hw; ++t) pool.emplace_back(worker);
    }

    std::size_t bi = 0;
    for (std::size_t i = 1; i < rows; ++i)
        if (row_best[i] > row_best[bi]) bi = i;
    SupResult r;
    r.value = std::pow(row_best[bi], 1.0 / pp.outer);
    r.x = first + static_cast<Index>(bi);
    r.y = first + static_cast<Index>(row_arg[bi]);
    return r;
}

void require_pairs(const WeightedInterval& w, const char* what) {
    require(w.size() >= 2, ErrorKind::InvalidArgument,
            std::string(what) + " needs at least two points (a pair x < y)");
}

std::vector<double> powered(std::span<const double> values, double r) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::pow(values[i], r);
    return out;
}

// D = sum_{x}^{y-1} u, a[i] = sum_{-M}^{x} v_hat, b[j] = sum_{y}^{N} v_hat
PairProblem dd_problem(const WeightedInterval& w, double inner, Combine combine, double power,
                       double outer) {
    auto vp = prefix_sums(w.v_hat());
    auto vs = suffix_sums(w.v_hat());
    std::vector<double> a(vp.begin() + 1, vp.end());
    vs.pop_back();
    PairProblem pp;
    pp.terms.assign(w.u().begin(), w.u().end());
    pp.shift = 0;
    pp.left = powered(a, inner);
    pp.right = powered(vs, inner);
    pp.combine = combine;
    pp.power = power;
    pp.outer = outer;
    return pp;
}

// D = sum_{x+1}^{y} v_hat, alpha[i] = sum_{-M}^{x} u, beta[j] = sum_{y}^{N} u
PairProblem nn_problem(const WeightedInterval& w, double inner, Combine combine, double power,
                       double outer) {
    auto up = prefix_sums(w.u());
    auto us = suffix_sums(w.u());
    std::vector<double> alpha(up.begin() + 1, up.end());
    us.pop_back();
    PairProblem pp;
    pp.terms.assign(w.v_hat().begin(), w.v_hat().end());
    pp.shift = 1;
    pp.left = powered(alpha, inner);
    pp.right = powered(us, inner);
    pp.combine = combine;
    pp.power = power;
    pp.outer = outer;
    return pp;
}

}  // namespace

SupResult b_nd(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    const auto up = prefix_sums(w.u());
    const auto vs = suffix_sums(w.v_hat());
    SupResult best{-1.0, 0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double val = std::pow(up[i + 1], 1.0 / e.q()) * std::pow(vs[i], 1.0 / e.p_star());
        if (val > best.value) best = {val, w.first() + static_cast<Index>(i), w.first() + static_cast<Index>(i)};
    }
    return best;
}

SupResult b_dn(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    const auto vp = prefix_sums(w.v_hat());
    const auto us = suffix_sums(w.u());
    SupResult best{-1.0, 0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double val = std::pow(vp[i + 1], 1.0 / e.p_star()) * std::pow(us[i], 1.0 / e.q());
        if (val > best.value) best = {val, w.first() + static_cast<Index>(i), w.first() + static_cast<Index>(i)};
    }
    return best;
}

SupResult b_dd_lower(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require_pairs(w, "b_dd_lower");
    const double p = e.p();
    const double q = e.q();
    // U [a^(1-p) + b^(1-p)]^(-q/p), then the 1/q root
    auto pp = q == p ? dd_problem(w, 1.0 - p, Combine::Divide, 0.0, q)
                     : dd_problem(w, 1.0 - p, Combine::Power, q / p, q);
    return scan_pairs(pp, w.first());
}

SupResult b_dd_upper(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require_pairs(w, "b_dd_upper");
    // U / [a^(-q/p*) + b^(-q/p*)], then the 1/q root
    auto pp = dd_problem(w, -e.q() / e.p_star(), Combine::Divide, 0.0, e.q());
    return scan_pairs(pp, w.first());
}

SupResult b_nn_lower(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require_pairs(w, "b_nn_lower");
    const double ps = e.p_star();
    const double qs = e.q_star();
    // V [alpha^(1-q*) + beta^(1-q*)]^(-p*/q*), then the 1/p* root
    auto pp = ps == qs ? nn_problem(w, 1.0 - qs, Combine::Divide, 0.0, ps)
                       : nn_problem(w, 1.0 - qs, Combine::Power, ps / qs, ps);
    return scan_pairs(pp, w.first());
}

SupResult b_nn_upper(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require_pairs(w, "b_nn_upper");
    const double ps = e.p_star();
    auto pp = nn_problem(w, -ps / e.q(), Combine::Divide, 0.0, ps);
    return scan_pairs(pp, w.first());
}

SupResult b_opic(const WeightedInterval& w, const Exponents& e) {
    w.require_compatible(e);
    require_pairs(w, "b_opic");
    auto pp = dd_problem(w, e.q() / e.p_star(), Combine::Min, 0.0, e.q());
    return scan_pairs(pp, w.first());
}

std::optional<double> BoundsReport::upper_estimate() const {
    if (!k) return std::nullopt;
    return k->value * upper.value;
}

SupResult lower_constant(BoundaryCase c, const WeightedInterval& w, const Exponents& e) {
    switch (c) {
        case BoundaryCase::ND: return b_nd(w, e);
        case BoundaryCase::DN: return b_dn(w, e);
        case BoundaryCase::DD: return b_dd_lower(w, e);
        case BoundaryCase::NN: return b_nn_lower(w, e);
    }
    fail(ErrorKind::InvalidArgument, "unknown boundary case");
}

SupResult upper_constant(BoundaryCase c, const WeightedInterval& w, const Exponents& e) {
    switch (c) {
        case BoundaryCase::ND: return b_nd(w, e);
        case BoundaryCase::DN: return b_dn(w, e);
        case BoundaryCase::DD: return b_dd_upper(w, e);
        case BoundaryCase::NN: return b_nn_upper(w, e);
    }
    fail(ErrorKind::InvalidArgument, "unknown boundary case");
}

BoundsReport compute_bounds(BoundaryCase c, const WeightedInterval& w, const Exponents& e) {
    BoundsReport r{c, e.p(), e.q(), {}, {}, std::nullopt, std::nullopt};
    r.lower = lower_constant(c, w, e);
    r.upper = c == BoundaryCase::ND || c == BoundaryCase::DN ? r.lower : upper_constant(c, w, e);
    if (e.ordered()) r.k = k_qp(e);
    if (c == BoundaryCase::DD) r.opic = b_opic(w, e);
    return r;
}

}  // namespace hardy
