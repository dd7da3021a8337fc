#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hardy {

/// Interval index on [-M, N]. Array slots are never exposed publicly.
using Index = std::int64_t;

/// |t|^r with |0|^r = 0.
[[nodiscard]] inline double abs_pow(double t, double r) {
    if (r == 2.0) return t * t;
    if (t == 0.0) return 0.0;
    return std::pow(std::abs(t), r);
}

/// sgn(t)|t|^r, i.e. |t|^(r-1) t read with sgn(0) = 0.
[[nodiscard]] inline double signed_pow(double t, double r) {
    if (r == 1.0) return t;
    if (t == 0.0) return 0.0;
    const double m = std::pow(std::abs(t), r);
    return t < 0.0 ? -m : m;
}

/// A pair (p, q) with conjugates p* = p/(p-1), q* = q/(q-1).
class Exponents {
public:
    Exponents(double p, double q);

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double q() const noexcept { return q_; }
    [[nodiscard]] double p_star() const noexcept { return p_star_; }
    [[nodiscard]] double q_star() const noexcept { return q_star_; }

    /// p <= q, required by every upper estimate.
    [[nodiscard]] bool ordered() const noexcept { return p_ <= q_; }
    [[nodiscard]] bool diagonal() const noexcept { return p_ == q_; }
    void require_ordered(const char* context) const;

    [[nodiscard]] static double conjugate(double r) { return r / (r - 1.0); }

private:
    double p_;
    double q_;
    double p_star_;
    double q_star_;
};

enum class WeightCheck {
    Positive,     ///< user weights: every entry finite and > 0
    NonNegative,  ///< split families, where gamma in {0, 1} zeroes one slot
};

/// Weights u, v on [first, first + size - 1] together with v_hat = v^(1 - p*).
///
/// v_hat depends on p, so an interval is tied to the exponent it was built
/// with; operations taking both an interval and Exponents check they agree.
class WeightedInterval {
public:
    WeightedInterval(Index first, std::vector<double> u, std::vector<double> v,
                     double p, WeightCheck check = WeightCheck::Positive);

    /// Builds from u and v_hat directly; v is recovered as v_hat^(1-p).
    /// With NonNegative, v_hat == 0 stands for an infinite conductance.
    [[nodiscard]] static WeightedInterval from_hat(Index first, std::vector<double> u,
                                                   std::vector<double> v_hat, double p,
                                                   WeightCheck check = WeightCheck::Positive);

    [[nodiscard]] Index first() const noexcept { return first_; }
    [[nodiscard]] Index last() const noexcept { return first_ + static_cast<Index>(u_.size()) - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return u_.size(); }
    [[nodiscard]] bool contains(Index n) const noexcept { return n >= first() && n <= last(); }
    /// Array slot of index n; throws when n is outside the interval.
    [[nodiscard]] std::size_t slot(Index n) const;

    [[nodiscard]] double u_at(Index n) const { return u_[slot(n)]; }
    [[nodiscard]] double v_at(Index n) const { return v_[slot(n)]; }
    [[nodiscard]] double v_hat_at(Index n) const { return v_hat_[slot(n)]; }

    [[nodiscard]] std::span<const double> u() const noexcept { return u_; }
    [[nodiscard]] std::span<const double> v() const noexcept { return v_; }
    [[nodiscard]] std::span<const double> v_hat() const noexcept { return v_hat_; }

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double p_star() const noexcept { return Exponents::conjugate(p_); }

    /// Throws unless e.p() equals the p this interval was built with.
    void require_compatible(const Exponents& e) const;

    /// The weights restricted to [from, to].
    [[nodiscard]] WeightedInterval sub(Index from, Index to) const;

    /// The same weights with index order reversed onto [-N, M].
    [[nodiscard]] WeightedInterval reversed() const;

private:
    WeightedInterval() = default;

    Index first_ = 0;
    std::vector<double> u_;
    std::vector<double> v_;
    std::vector<double> v_hat_;
    double p_ = 2.0;
};

enum class BoundaryCase { ND, DN, DD, NN };

/// "nd", "dn", "dd", "nn" (case-insensitive); throws on anything else.
[[nodiscard]] BoundaryCase parse_case(std::string_view name);
[[nodiscard]] std::string_view case_name(BoundaryCase c) noexcept;

enum class LeftBoundary { DirichletZero, NeumannCopy, Free };
enum class RightBoundary { DirichletZero, Free };

/// Real sequence on [first, last] with padding rules for first-1 and last+1.
class Sequence {
public:
    Sequence() = default;
    Sequence(Index first, std::vector<double> values,
             LeftBoundary left = LeftBoundary::Free,
             RightBoundary right = RightBoundary::Free);

    [[nodiscard]] Index first() const noexcept { return first_; }
    [[nodiscard]] Index last() const noexcept { return first_ + static_cast<Index>(values_.size()) - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] LeftBoundary left() const noexcept { return left_; }
    [[nodiscard]] RightBoundary right() const noexcept { return right_; }

    /// In-range access; throws outside [first, last].
    [[nodiscard]] double operator[](Index n) const;

    /// Access on [first-1, last+1] following the boundary rules. Free padding
    /// and anything further out throw.
    [[nodiscard]] double at(Index n) const;

    [[nodiscard]] Sequence with_boundaries(LeftBoundary left, RightBoundary right) const;

    /// True when x lives on exactly w's index range.
    [[nodiscard]] bool spans(const WeightedInterval& w) const noexcept {
        return first_ == w.first() && size() == w.size();
    }

private:
    Index first_ = 0;
    std::vector<double> values_;
    LeftBoundary left_ = LeftBoundary::Free;
    RightBoundary right_ = RightBoundary::Free;
};

/// (sum_n u_n |x_n - shift|^q)^(1/q)
[[nodiscard]] double lq_norm(const Sequence& x, const WeightedInterval& w,
                             const Exponents& e, double shift = 0.0);

/// (sum_{n=-M}^{N} v_n |x_n - x_{n+1}|^p)^(1/p); x_{N+1} comes from x's right boundary.
[[nodiscard]] double forward_energy(const Sequence& x, const WeightedInterval& w,
                                    const Exponents& e);

/// (sum_{n=-M}^{N} v_n |x_n - x_{n-1}|^p)^(1/p); x_{-M-1} comes from x's left boundary.
[[nodiscard]] double backward_energy(const Sequence& x, const WeightedInterval& w,
                                     const Exponents& e);

/// Hx(n) = sum_{i=first}^{n} x_i
[[nodiscard]] Sequence hardy_H(const Sequence& x);
/// H*x(n) = sum_{i=n}^{last} x_i
[[nodiscard]] Sequence hardy_Hstar(const Sequence& x);

/// <x, y> = sum_n x_n y_n over a common index range.
[[nodiscard]] double inner(const Sequence& x, const Sequence& y);

/// y_n = max_{k >= n} |x_k|
[[nodiscard]] Sequence decreasing_rearrange(const Sequence& x);

}  // namespace hardy
