#include "hardy/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <sstream>
#include <utility>

#include "hardy/error.hpp"
#include "hardy/summation.hpp"

namespace hardy {

Exponents::Exponents(double p, double q) : p_(p), q_(q) {
    require(std::isfinite(p) && p > 1.0, ErrorKind::InvalidArgument,
            "exponent p must be finite and > 1");
    require(std::isfinite(q) && q > 1.0, ErrorKind::InvalidArgument,
            "exponent q must be finite and > 1");
    p_star_ = conjugate(p);
    q_star_ = conjugate(q);
}

void Exponents::require_ordered(const char* context) const {
    if (!ordered()) {
        std::ostringstream os;
        os << context << ": upper estimates need p <= q (got p=" << p_ << ", q=" << q_ << ")";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

namespace {

void check_weights(std::span<const double> values, const char* name, WeightCheck check,
                   bool allow_inf) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        const bool finite_ok = std::isfinite(x) || (allow_inf && x == std::numeric_limits<double>::infinity());
        const bool sign_ok = check == WeightCheck::Positive ? x > 0.0 : x >= 0.0;
        if (!finite_ok || !sign_ok) {
            std::ostringstream os;
            os << "weight " << name << "[" << i << "] = " << x << " is not "
               << (check == WeightCheck::Positive ? "finite and positive" : "finite and nonnegative");
            fail(ErrorKind::BadInput, os.str());
        }
    }
}

}  // namespace

WeightedInterval::WeightedInterval(Index first, std::vector<double> u, std::vector<double> v,
                                   double p, WeightCheck check)
    : first_(first), u_(std::move(u)), v_(std::move(v)), p_(p) {
    require(std::isfinite(p) && p > 1.0, ErrorKind::InvalidArgument, "exponent p must be > 1");
    require(!u_.empty(), ErrorKind::BadInput, "weights must be nonempty");
    require(u_.size() == v_.size(), ErrorKind::BadInput, "u and v must have the same length");
    check_weights(u_, "u", check, false);
    check_weights(v_, "v", WeightCheck::Positive, check == WeightCheck::NonNegative);
    const double expo = 1.0 - p_star();
    v_hat_.resize(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v_hat_[i] = std::pow(v_[i], expo);
}

WeightedInterval WeightedInterval::from_hat(Index first, std::vector<double> u,
                                            std::vector<double> v_hat, double p,
                                            WeightCheck check) {
    require(std::isfinite(p) && p > 1.0, ErrorKind::InvalidArgument, "exponent p must be > 1");
    require(!u.empty(), ErrorKind::BadInput, "weights must be nonempty");
    require(u.size() == v_hat.size(), ErrorKind::BadInput, "u and v_hat must have the same length");
    check_weights(u, "u", check, false);
    check_weights(v_hat, "v_hat", check, false);
    WeightedInterval w;
    w.first_ = first;
    w.p_ = p;
    w.u_ = std::move(u);
    w.v_hat_ = std::move(v_hat);
    w.v_.resize(w.v_hat_.size());
    for (std::size_t i = 0; i < w.v_hat_.size(); ++i)
        w.v_[i] = w.v_hat_[i] == 0.0 ? std::numeric_limits<double>::infinity()
                                     : std::pow(w.v_hat_[i], 1.0 - p);
    return w;
}

std::size_t WeightedInterval::slot(Index n) const {
    if (!contains(n)) {
        std::ostringstream os;
        os << "index " << n << " outside [" << first() << ", " << last() << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    return static_cast<std::size_t>(n - first_);
}

void WeightedInterval::require_compatible(const Exponents& e) const {
    if (e.p() != p_) {
        std::ostringstream os;
        os << "weights were built for p=" << p_ << " but exponents give p=" << e.p();
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

WeightedInterval WeightedInterval::sub(Index from, Index to) const {
    require(from <= to, ErrorKind::InvalidArgument, "sub-interval needs from <= to");
    const std::size_t a = slot(from);
    const std::size_t b = slot(to) + 1;
    WeightedInterval w;
    w.first_ = from;
    w.p_ = p_;
    w.u_.assign(u_.begin() + static_cast<std::ptrdiff_t>(a), u_.begin() + static_cast<std::ptrdiff_t>(b));
    w.v_.assign(v_.begin() + static_cast<std::ptrdiff_t>(a), v_.begin() + static_cast<std::ptrdiff_t>(b));
    w.v_hat_.assign(v_hat_.begin() + static_cast<std::ptrdiff_t>(a), v_hat_.begin() + static_cast<std::ptrdiff_t>(b));
    return w;
}

WeightedInterval WeightedInterval::reversed() const {
    WeightedInterval w;
    w.first_ = -last();
    w.p_ = p_;
    w.u_.assign(u_.rbegin(), u_.rend());
    w.v_.assign(v_.rbegin(), v_.rend());
    w.v_hat_.assign(v_hat_.rbegin(), v_hat_.rend());
    return w;
}

BoundaryCase parse_case(std::string_view name) {
    std::string lower(name);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "nd") return BoundaryCase::ND;
    if (lower == "dn") return BoundaryCase::DN;
    if (lower == "dd") return BoundaryCase::DD;
    if (lower == "nn") return BoundaryCase::NN;
    fail(ErrorKind::InvalidArgument, "unknown boundary case '" + std::string(name) + "'");
}

std::string_view case_name(BoundaryCase c) noexcept {
    switch (c) {
        case BoundaryCase::ND: return "nd";
        case BoundaryCase::DN: return "dn";
        case BoundaryCase::DD: return "dd";
        case BoundaryCase::NN: return "nn";
    }
    return "?";
}

Sequence::Sequence(Index first, std::vector<double> values, LeftBoundary left,
                   RightBoundary right)
    : first_(first), values_(std::move(values)), left_(left), right_(right) {}

double Sequence::operator[](Index n) const {
    if (n < first_ || n > last()) {
        std::ostringstream os;
        os << "sequence index " << n << " outside [" << first_ << ", " << last() << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    return values_[static_cast<std::size_t>(n - first_)];
}

double Sequence::at(Index n) const {
    if (!empty() && n == first_ - 1) {
        switch (left_) {
            case LeftBoundary::DirichletZero: return 0.0;
            case LeftBoundary::NeumannCopy: return values_.front();
            case LeftBoundary::Free: break;
        }
        fail(ErrorKind::InvalidArgument, "left boundary value is unresolved (Free)");
    }
    if (!empty() && n == last() + 1) {
        if (right_ == RightBoundary::DirichletZero) return 0.0;
        fail(ErrorKind::InvalidArgument, "right boundary value is unresolved (Free)");
    }
    return (*this)[n];
}

Sequence Sequence::with_boundaries(LeftBoundary left, RightBoundary right) const {
    return Sequence(first_, values_, left, right);
}

namespace {

void require_support(const Sequence& x, const WeightedInterval& w) {
    if (!x.spans(w)) {
        std::ostringstream os;
        os << "sequence on [" << x.first() << ", " << x.last() << "] does not match weights on ["
           << w.first() << ", " << w.last() << "]";
        fail(ErrorKind::InvalidArgument, os.str());
    }
}

}  // namespace

double lq_norm(const Sequence& x, const WeightedInterval& w, const Exponents& e, double shift) {
    require_support(x, w);
    const auto xs = x.values();
    const auto u = w.u();
    std::vector<double> terms(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) terms[i] = u[i] * abs_pow(xs[i] - shift, e.q());
    return std::pow(pairwise_sum(terms), 1.0 / e.q());
}

double forward_energy(const Sequence& x, const WeightedInterval& w, const Exponents& e) {
    require_support(x, w);
    w.require_compatible(e);
    const auto v = w.v();
    std::vector<double> terms(x.size());
    for (Index n = x.first(); n <= x.last(); ++n) {
        const auto i = static_cast<std::size_t>(n - x.first());
        terms[i] = v[i] * abs_pow(x[n] - x.at(n + 1), e.p());
    }
    return std::pow(pairwise_sum(terms), 1.0 / e.p());
}

double backward_energy(const Sequence& x, const WeightedInterval& w, const Exponents& e) {
    require_support(x, w);
    w.require_compatible(e);
    const auto v = w.v();
    std::vector<double> terms(x.size());
    for (Index n = x.first(); n <= x.last(); ++n) {
        const auto i = static_cast<std::size_t>(n - x.first());
        terms[i] = v[i] * abs_pow(x[n] - x.at(n - 1), e.p());
    }
    return std::pow(pairwise_sum(terms), 1.0 / e.p());
}

Sequence hardy_H(const Sequence& x) {
    auto sums = prefix_sums(x.values());
    sums.erase(sums.begin());
    return Sequence(x.first(), std::move(sums));
}

Sequence hardy_Hstar(const Sequence& x) {
    auto sums = suffix_sums(x.values());
    sums.pop_back();
    return Sequence(x.first(), std::move(sums));
}

double inner(const Sequence& x, const Sequence& y) {
    require(x.first() == y.first() && x.size() == y.size(), ErrorKind::InvalidArgument,
            "inner product needs sequences on the same interval");
    std::vector<double> terms(x.size());
    const auto xs = x.values();
    const auto ys = y.values();
    for (std::size_t i = 0; i < xs.size(); ++i) terms[i] = xs[i] * ys[i];
    return pairwise_sum(terms);
}

Sequence decreasing_rearrange(const Sequence& x) {
    std::vector<double> y(x.size());
    double running = 0.0;
    const auto xs = x.values();
    for (std::size_t i = xs.size(); i-- > 0;) {
        running = std::max(running, std::abs(xs[i]));
        y[i] = running;
    }
    return Sequence(x.first(), std::move(y), x.left(), x.right());
}

}  // namespace hardy
