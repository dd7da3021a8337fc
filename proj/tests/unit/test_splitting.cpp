#include <doctest.h>

#include <cmath>

#include "hardy/bounds.hpp"
#include "hardy/error.hpp"
#include "hardy/meanzero.hpp"
#include "hardy/splitting.hpp"
#include "hardy/variational.hpp"
#include "support.hpp"

using namespace hardy;
using hardy::testing::rel_diff;
using hardy::testing::Rng;

namespace {

WeightedInterval unit(Index first, std::size_t n, double p = 2.0) {
    return WeightedInterval(first, std::vector<double>(n, 1.0), std::vector<double>(n, 1.0), p);
}

double sum_of(std::span<const double> xs) {
    double s = 0.0;
    for (double t : xs) s += t;
    return s;
}

Sequence random_dd_sequence(Rng& rng, const WeightedInterval& w) {
    auto vals = hardy::testing::random_values(rng, w.size(), -2.0, 2.0);
    vals.back() = 0.0;
    return Sequence(w.first(), std::move(vals), LeftBoundary::DirichletZero, RightBoundary::Free);
}

void check_identity(const SplitIdentity& id, double tol) {
    CHECK(rel_diff(id.norm_whole, id.norm_split) <= tol);
    CHECK(rel_diff(id.energy_whole, id.energy_split) <= tol);
}

const std::vector<std::pair<double, double>> kExps{{2, 2}, {1.5, 1.5}, {1.5, 3}, {2, 4}, {3, 1.5}};

}  // namespace

// ---- DD ----

TEST_CASE("dd split weights move the mass at zeta") {
    const WeightedInterval w(0, {1, 2, 3, 4}, {5, 6, 7, 8}, 2.0);
    const auto g0 = dd_split_weights(w, 1, 0.0);
    CHECK(g0.left.first() == 0);
    CHECK(g0.left.last() == 1);
    CHECK(g0.left.u_at(1) == 2.0);
    CHECK(g0.right.first() == 2);
    CHECK(g0.right.last() == 4);
    CHECK(g0.right.u_at(2) == 0.0);
    CHECK(g0.right.u_at(3) == 3.0);
    CHECK(g0.right.u_at(4) == 4.0);
    CHECK(g0.right.v_at(2) == 7.0);
    const auto g1 = dd_split_weights(w, 1, 1.0);
    CHECK(g1.left.u_at(1) == 0.0);
    CHECK(g1.right.u_at(2) == 2.0);
    CHECK_THROWS_AS((void)dd_split_weights(w, 0, 0.5), Error);
    CHECK_THROWS_AS((void)dd_split_weights(w, 3, 0.5), Error);
    CHECK_THROWS_AS((void)dd_split_weights(w, 1, 1.5), Error);
}

TEST_CASE("property: dd split conserves mass") {
    Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = hardy::testing::random_interval(rng, 3 + rng() % 10, 2.0);
        const Index zeta = w.first() + 1 + static_cast<Index>(rng() % (w.size() - 2));
        const double g = hardy::testing::random_values(rng, 1, 0.0, 1.0)[0];
        const auto f = dd_split_weights(w, zeta, g);
        CHECK(rel_diff(sum_of(f.left.u()) + sum_of(f.right.u()), sum_of(w.u())) <= 1e-14);
    }
}

TEST_CASE("dd splitting identities: examples") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 6);
    const Sequence zero(0, std::vector<double>(6, 0.0), LeftBoundary::DirichletZero);
    const auto id0 = dd_split_identities(w, e, zero, 2, 0.37);
    CHECK(id0.norm_whole == 0.0);
    CHECK(id0.norm_split == 0.0);
    CHECK(id0.energy_whole == 0.0);
    CHECK(id0.energy_split == 0.0);

    Rng rng(6);
    const Exponents e2(1.5, 3.0);
    const auto wr = hardy::testing::random_interval(rng, 6, 1.5);
    const auto x = random_dd_sequence(rng, wr);
    check_identity(dd_split_identities(wr, e2, x, wr.first() + 2, 0.37), 1e-12);
    check_identity(dd_split_identities(wr, e2, x, wr.last() - 1, 0.37), 1e-12);
    CHECK_THROWS_AS((void)dd_split_sequences(Sequence(0, {1.0, 1.0, 1.0}), 1), Error);
}

TEST_CASE("property: dd splitting identities on random triples") {
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 3 + rng() % 12, p);
        const auto x = random_dd_sequence(rng, w);
        const Index zeta = w.first() + 1 + static_cast<Index>(rng() % (w.size() - 2));
        const double g = hardy::testing::random_values(rng, 1, 0.0, 1.0)[0];
        check_identity(dd_split_identities(w, e, x, zeta, g), 1e-12);
    }
}

TEST_CASE("dd curves: shift identity and monotonicity in zeta") {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 10, p);
        for (Index z = w.first(); z < w.last(); ++z) {
            const auto a = dd_b_curves(w, e, z, 0.0);
            const auto b = dd_b_curves(w, e, z + 1, 1.0);
            CHECK(rel_diff(a.minus, b.minus) <= 1e-13);
            CHECK(rel_diff(a.plus, b.plus) <= 1e-13);
        }
        for (double g : {0.0, 0.3, 1.0}) {
            for (Index z = w.first(); z < w.last(); ++z) {
                const auto a = dd_b_curves(w, e, z, g);
                const auto b = dd_b_curves(w, e, z + 1, g);
                CHECK(b.minus >= a.minus * (1.0 - 1e-14));
                CHECK(b.plus <= a.plus * (1.0 + 1e-14));
            }
        }
    }
}

TEST_CASE("dd crossing on the symmetric instance") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 4);
    const auto sp = dd_find_crossing(w, e);
    CHECK(sp.zeta == 1);
    CHECK(sp.gamma == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rel_diff(sp.b_minus, sp.b_plus) <= 1e-10);
    // Grid oracle: at zeta = 1 the sign of B- - B+ flips exactly once, around gamma = 1/2.
    int flips = 0;
    double prev = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        const auto c = dd_b_curves(w, e, 1, k / 1000.0);
        const double d = c.minus - c.plus;
        if (k > 0 && (d > 0.0) != (prev > 0.0)) {
            ++flips;
            CHECK(std::abs(k / 1000.0 - 0.5) <= 1e-3);
        }
        prev = d;
    }
    CHECK(flips == 1);
}

TEST_CASE("dd crossing on random instances") {
    Rng rng(88);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kExps[trial % 4];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 9, p);
        const auto sp = dd_find_crossing(w, e);
        CHECK(std::abs(sp.b_minus - sp.b_plus) <= 1e-10 * std::max(sp.b_minus, sp.b_plus));
        CHECK(std::min(sp.b_minus, sp.b_plus) <= b_dd_upper(w, e).value * (1.0 + 1e-12));
        const auto again = dd_b_curves(w, e, sp.zeta, sp.gamma);
        CHECK(again.minus == sp.b_minus);
        CHECK(again.plus == sp.b_plus);
    }
    const auto sp2 = dd_find_crossing(unit(0, 2), Exponents(2.0, 2.0));
    CHECK(rel_diff(sp2.b_minus, sp2.b_plus) <= 1e-10);
}

TEST_CASE("dd witness on two unit points") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 2);
    const auto x = dd_witness(w, e, 0, 1);
    CHECK(x[1] == 0.0);
    CHECK(x.at(-1) == 0.0);
    CHECK(ratio(BoundaryCase::DD, x, w, e) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("property: dd witness reaches the lower constant") {
    Rng rng(90);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 14, p);
        const auto best = b_dd_lower(w, e);
        const auto x = dd_witness(w, e, best.x, best.y);
        CHECK(x[w.last()] == 0.0);
        CHECK(x.left() == LeftBoundary::DirichletZero);
        CHECK(ratio(BoundaryCase::DD, x, w, e) >= best.value - 1e-10 * best.value);
    }
    CHECK_THROWS_AS((void)dd_witness(unit(0, 3), Exponents(2, 2), 2, 1), Error);
}

TEST_CASE("split sandwich with exact one-sided constants at p = q = 2") {
    Rng rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t L = 3 + rng() % 6;
        const auto w = hardy::testing::random_interval(rng, L, 2.0, 4.0);
        const double a = eigen_oracle(BoundaryCase::DD, w);
        double sup_min = 0.0;
        double inf_max = 1e300;
        for (Index z = w.first() + 1; z < w.last(); ++z) {
            for (int k = 0; k <= 10; ++k) {
                const double g = k / 10.0;
                const auto f = dd_split_weights(w, z, g);
                // Left: Dirichlet on the left, free at zeta. Right: free at zeta+1, pinned at N+1.
                const auto left = f.left;
                const WeightedInterval right(z + 1, {f.right.u().begin(), f.right.u().end() - 1},
                                             {w.v().begin() + (z + 1 - w.first()), w.v().end()}, 2.0,
                                             WeightCheck::NonNegative);
                const bool lm = sum_of(left.u()) > 0.0;
                const bool rm = sum_of(right.u()) > 0.0;
                const double am = lm ? eigen_oracle(BoundaryCase::DN, left) : 0.0;
                const double ap = rm ? eigen_oracle(BoundaryCase::ND, right) : 0.0;
                sup_min = std::max(sup_min, std::min(am, ap));
                inf_max = std::min(inf_max, std::max(am, ap));
            }
        }
        CHECK(sup_min <= a * (1.0 + 1e-10));
        CHECK(a <= inf_max * (1.0 + 1e-10));
    }
}

// ---- NN ----

TEST_CASE("nn split weights live in hat space") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = 1.2 + 3.0 * hardy::testing::random_values(rng, 1, 0.0, 1.0)[0];
        const Exponents e(p, p);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 8, p);
        const Index z = w.first() + 1 + static_cast<Index>(rng() % (w.size() - 1));
        const double g = hardy::testing::random_values(rng, 1, 0.01, 1.0)[0];
        const auto f = nn_split_weights(w, e, z, g);
        CHECK(rel_diff(std::pow(std::pow(g, 1.0 - p) * w.v_at(z), 1.0 - e.p_star()), g * w.v_hat_at(z)) <= 1e-13);
        CHECK(f.left.v_hat_at(z) == g * w.v_hat_at(z));
        CHECK(rel_diff(f.left.v_hat_at(z) + f.right.v_hat_at(z), w.v_hat_at(z)) <= 1e-15);
        CHECK(f.left.first() == w.first() + 1);
        CHECK(f.left.last() == z);
        CHECK(f.right.first() == z);
        CHECK(f.right.last() == w.last());
        for (Index n = f.left.first(); n <= f.left.last(); ++n) CHECK(f.left.u_at(n) == w.u_at(n - 1));
        for (Index n = f.right.first(); n <= f.right.last(); ++n) CHECK(f.right.u_at(n) == w.u_at(n));
    }
    const auto w = unit(0, 3);
    const auto f0 = nn_split_weights(w, Exponents(2, 2), 1, 0.0);
    CHECK(f0.left.v_hat_at(1) == 0.0);
    CHECK(f0.right.v_hat_at(1) == 1.0);
    CHECK_THROWS_AS((void)nn_split_weights(w, Exponents(2, 2), 0, 0.5), Error);
    CHECK_THROWS_AS((void)nn_split_weights(w, Exponents(2, 2), 3, 0.5), Error);
}

TEST_CASE("nn splitting identities: examples") {
    const Exponents e(1.5, 3.0);
    Rng rng(17);
    const auto w = hardy::testing::random_interval(rng, 6, 1.5);
    const Sequence c(w.first(), std::vector<double>(6, 2.5));
    const auto idc = nn_split_identities(w, e, c, w.first() + 3, 0.37);
    CHECK(idc.energy_whole == 0.0);
    CHECK(idc.energy_split == 0.0);
    const Sequence x(w.first(), hardy::testing::random_values(rng, 6));
    check_identity(nn_split_identities(w, e, x, w.first() + 3, 0.37), 1e-12);
    check_identity(nn_split_identities(w, e, x, w.first() + 2, 0.0), 1e-12);
    check_identity(nn_split_identities(w, e, x, w.first() + 2, 1.0), 1e-12);
    const auto s0 = nn_split_sequences(x, w.first() + 2, 0.0);
    CHECK(s0.minus[w.first() + 3] == x[w.first() + 1]);
    const auto s1 = nn_split_sequences(x, w.first() + 2, 1.0);
    CHECK(s1.plus[w.first() + 1] == x[w.first() + 2]);
}

TEST_CASE("property: nn splitting identities on random triples") {
    Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 12, p);
        const Sequence x(w.first(), hardy::testing::random_values(rng, w.size(), -2.0, 2.0));
        const Index zeta = w.first() + 1 + static_cast<Index>(rng() % (w.size() - 1));
        const double g = hardy::testing::random_values(rng, 1, 0.0, 1.0)[0];
        check_identity(nn_split_identities(w, e, x, zeta, g), 1e-12);
    }
}

TEST_CASE("nn curves glue across zeta and are monotone in gamma") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 10, p);
        for (Index z = w.first(); z < w.last(); ++z) {
            const auto a = nn_b_curves(w, e, z, 1.0);
            const auto b = nn_b_curves(w, e, z + 1, 0.0);
            CHECK(rel_diff(a.minus, b.minus) <= 1e-13);
            CHECK(rel_diff(a.plus, b.plus) <= 1e-13);
        }
        for (Index z = w.first(); z <= w.last(); ++z) {
            CurvePair prev = nn_b_curves(w, e, z, 0.0);
            for (int k = 1; k <= 20; ++k) {
                const auto c = nn_b_curves(w, e, z, k / 20.0);
                CHECK(c.minus >= prev.minus * (1.0 - 1e-14));
                CHECK(c.plus <= prev.plus * (1.0 + 1e-14));
                prev = c;
            }
        }
    }
}

TEST_CASE("nn crossings on the symmetric instance") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 4);
    const auto b = nn_find_crossing(w, e);
    CHECK(b.zeta == 2);
    CHECK(b.gamma == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rel_diff(b.b_minus, b.b_plus) <= 1e-10);
    const auto c = nn_find_crossing_C(w, e, 0, 3);
    CHECK(c.zeta == 2);
    CHECK(c.gamma == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rel_diff(c.b_minus, c.b_plus) <= 1e-10);
}

TEST_CASE("property: C-curve shift identities and crossing contract") {
    Rng rng(66);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 10, p);
        const Index x = w.first() + static_cast<Index>(rng() % (w.size() - 1));
        const Index y = x + 1 + static_cast<Index>(rng() % static_cast<std::size_t>(w.last() - x));
        for (Index z = x + 2; z <= y; ++z) {
            const auto a = nn_c_curves(w, e, x, y, z, 0.0);
            const auto b = nn_c_curves(w, e, x, y, z - 1, 1.0);
            CHECK(std::abs(a.minus - b.minus) <= 1e-13 * std::max({a.minus, b.minus, 1e-300}));
            CHECK(std::abs(a.plus - b.plus) <= 1e-13 * std::max({a.plus, b.plus, 1e-300}));
        }
        const auto sp = nn_find_crossing_C(w, e, x, y);
        CHECK(sp.zeta >= x + 1);
        CHECK(sp.zeta <= y);
        CHECK(std::abs(sp.b_minus - sp.b_plus) <= 1e-10 * std::max(sp.b_minus, sp.b_plus));
    }
}

TEST_CASE("nn B crossing on random instances stays below the upper constant") {
    Rng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kExps[trial % 4];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 9, p);
        const auto sp = nn_find_crossing(w, e);
        CHECK(std::abs(sp.b_minus - sp.b_plus) <= 1e-10 * std::max(sp.b_minus, sp.b_plus));
        CHECK(std::min(sp.b_minus, sp.b_plus) <= b_nn_upper(w, e).value * (1.0 + 1e-12));
    }
}

TEST_CASE("nn witness on two unit points") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 2);
    const auto x = nn_witness(w, e, 0, 1);
    CHECK(x[0] == doctest::Approx(-x[1]).epsilon(1e-12));
    CHECK(x[1] > 0.0);
    CHECK(ratio(BoundaryCase::NN, x, w, e) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("property: nn witness is mean-zero, has the predicted energy and beats the lower constant") {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [p, q] = kExps[trial % kExps.size()];
        const Exponents e(p, q);
        const auto w = hardy::testing::random_interval(rng, 2 + rng() % 14, p);
        const auto best = b_nn_lower(w, e);
        const auto x = nn_witness(w, e, best.x, best.y);
        double scale = 0.0;
        double mx = 0.0;
        for (double t : x.values()) mx = std::max(mx, std::abs(t));
        for (double u : w.u()) scale += u;
        scale *= std::pow(mx, q - 1.0);
        CHECK(std::abs(f_eval(x, w, e, 0.0)) <= 1e-9 * scale);
        const double energy = std::pow(backward_energy(x, w, e), p);
        const double predicted = hardy::testing::naive_sum(best.x + 1, best.y, [&](Index i) { return w.v_hat_at(i); });
        CHECK(rel_diff(energy, predicted) <= 1e-10);
        CHECK(ratio(BoundaryCase::NN, x, w, e) >= best.value * (1.0 - 1e-9));
    }
}
