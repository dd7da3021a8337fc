#include <doctest.h>

#include <cmath>

#include "hardy/bounds.hpp"
#include "hardy/error.hpp"
#include "hardy/example_weights.hpp"
#include "hardy/splitting.hpp"
#include "hardy/tridiagonal.hpp"
#include "hardy/variational.hpp"
#include "support.hpp"

using namespace hardy;
using hardy::testing::rel_diff;
using hardy::testing::Rng;

namespace {

WeightedInterval unit(Index first, std::size_t n, double p = 2.0) {
    return WeightedInterval(first, std::vector<double>(n, 1.0), std::vector<double>(n, 1.0), p);
}

constexpr BoundaryCase kCases[] = {BoundaryCase::ND, BoundaryCase::DN, BoundaryCase::DD, BoundaryCase::NN};

std::size_t min_size(BoundaryCase c) { return c == BoundaryCase::DD || c == BoundaryCase::NN ? 2 : 1; }

}  // namespace

TEST_CASE("ratio examples") {
    const Exponents e(2.0, 2.0);
    CHECK(ratio(BoundaryCase::ND, Sequence(0, {1.0}), unit(0, 1), e) == 1.0);
    CHECK(ratio(BoundaryCase::DN, Sequence(0, {1.0}), unit(0, 1), e) == 1.0);
    CHECK(ratio(BoundaryCase::DD, Sequence(0, {1.0}), unit(0, 2), e) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ratio(BoundaryCase::DD, Sequence(0, {1.0, 0.0}), unit(0, 2), e) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ratio(BoundaryCase::NN, Sequence(0, {-1.0, 1.0}), unit(0, 2), e) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("ratio rejects degenerate and inadmissible sequences") {
    const Exponents e(2.0, 2.0);
    CHECK_THROWS_AS((void)ratio(BoundaryCase::ND, Sequence(0, {0.0, 0.0}), unit(0, 2), e), Error);
    CHECK_THROWS_AS((void)ratio(BoundaryCase::NN, Sequence(0, {3.0, 3.0}), unit(0, 2), e), Error);
    CHECK_THROWS_AS((void)ratio(BoundaryCase::DD, Sequence(0, {1.0, 1.0}), unit(0, 2), e), Error);
    CHECK_THROWS_AS((void)ratio(BoundaryCase::DD, Sequence(0, {1.0, 1.0, 0.0}), unit(0, 2), e), Error);
    try {
        (void)ratio(BoundaryCase::NN, Sequence(0, {3.0, 3.0}), unit(0, 2), e);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Degenerate);
    }
}

TEST_CASE("eigen oracle examples") {
    const auto dd = eigen_oracle_full(BoundaryCase::DD, unit(0, 2));
    CHECK(dd.lambda == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dd.a == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    const auto nn = eigen_oracle_full(BoundaryCase::NN, unit(0, 2));
    CHECK(nn.lambda == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(nn.vector[0] == doctest::Approx(-nn.vector[1]).epsilon(1e-12));
    CHECK(nn.a == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    const auto dn = eigen_oracle_full(BoundaryCase::DN, unit(0, 1));
    CHECK(dn.lambda == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dn.a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)eigen_oracle(BoundaryCase::DD, unit(0, 3, 3.0)), Error);
}

TEST_CASE("property: eigen oracle agrees with a dense Jacobi decomposition") {
    Rng rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        const BoundaryCase c = kCases[trial % 4];
        const auto w = hardy::testing::random_interval(rng, min_size(c) + rng() % 12, 2.0);
        CHECK(rel_diff(eigen_oracle(c, w), hardy::testing::dense_oracle(c, w)) <= 1e-10);
    }
}

TEST_CASE("property: the oracle eigenvector attains the oracle value and solves the characteristic equation") {
    Rng rng(4);
    const Exponents e(2.0, 2.0);
    for (int trial = 0; trial < 80; ++trial) {
        const BoundaryCase c = kCases[trial % 4];
        const auto w = hardy::testing::random_interval(rng, min_size(c) + rng() % 40, 2.0);
        const auto o = eigen_oracle_full(c, w);
        CHECK(rel_diff(ratio(c, o.vector, w, e), o.a) <= 1e-10);
        double scale = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double xi = o.vector.values()[i];
            scale = std::max(scale, o.lambda * w.u()[i] * std::abs(xi));
        }
        CHECK(characteristic_residual(c, o.vector, o.lambda, w, e) <= 1e-8 * scale);
    }
}

TEST_CASE("characteristic residual examples") {
    const Exponents e(2.0, 2.0);
    const auto w = unit(0, 2);
    const auto x = dd_witness(w, e, 0, 1);
    CHECK(characteristic_residual(BoundaryCase::DD, x, 2.0, w, e) == 0.0);
    Rng rng(5);
    for (const BoundaryCase c : kCases) {
        const auto wr = hardy::testing::random_interval(rng, 6, 2.0);
        auto vals = hardy::testing::random_values(rng, 6);
        if (c == BoundaryCase::DD) vals.back() = 0.0;
        const Sequence xr(wr.first(), vals);
        const double lambda = std::pow(eigen_oracle(c, wr), -2.0);
        CHECK(characteristic_residual(c, xr, lambda, wr, e) > 1e-6);
    }
    CHECK_THROWS_AS((void)characteristic_residual(BoundaryCase::ND, Sequence(0, {1.0, 1.0}), 1.0, unit(0, 2),
                                                  Exponents(2.0, 3.0)),
                    Error);
}

TEST_CASE("estimate_A on two unit points") {
    const Exponents e(2.0, 2.0);
    const auto r = estimate_A(BoundaryCase::DD, unit(0, 2), e);
    CHECK(std::abs(r.a_hat - 1.0 / std::sqrt(2.0)) <= 1e-9);
    CHECK(r.maximizer[1] == 0.0);
    const auto n = estimate_A(BoundaryCase::NN, unit(0, 2), e);
    CHECK(std::abs(n.a_hat - 1.0 / std::sqrt(2.0)) <= 1e-9);
}

TEST_CASE("property: estimate_A matches the oracle at p = q = 2") {
    Rng rng(6);
    const Exponents e(2.0, 2.0);
    for (int trial = 0; trial < 24; ++trial) {
        const BoundaryCase c = kCases[trial % 4];
        const auto w = hardy::testing::random_interval(rng, min_size(c) + rng() % 63, 2.0);
        EstimateConfig cfg;
        cfg.oracle = true;
        cfg.seed = static_cast<std::uint64_t>(trial);
        const auto r = estimate_A(c, w, e, cfg);
        REQUIRE(r.oracle_value.has_value());
        CHECK(std::abs(r.a_hat - *r.oracle_value) <= 1e-6 * *r.oracle_value);
        CHECK(r.a_hat <= *r.oracle_value * (1.0 + 1e-12));
    }
}

TEST_CASE("property: certified lower bound and sandwich") {
    Rng rng(7);
    const std::vector<std::pair<double, double>> exps{{2, 2}, {1.5, 1.5}, {1.5, 3}, {2, 4}};
    for (int trial = 0; trial < 40; ++trial) {
        const auto [p, q] = exps[trial % exps.size()];
        const Exponents e(p, q);
        const BoundaryCase c = kCases[(trial / 4) % 4];
        const auto w = hardy::testing::random_interval(rng, min_size(c) + rng() % 12, p);
        EstimateConfig cfg;
        cfg.seed = 99;
        const auto r = estimate_A(c, w, e, cfg);
        CHECK(rel_diff(ratio(c, r.maximizer, w, e), r.a_hat) <= 1e-12);
        const auto b = compute_bounds(c, w, e);
        const double scale = b.b_upper();
        CHECK(b.b_lower() <= r.a_hat + 1e-9 * scale);
        CHECK(r.a_hat <= b.k->value * b.b_upper() * (1.0 + 1e-9));
    }
}

TEST_CASE("estimate_A is deterministic for a fixed seed") {
    Rng rng(8);
    const Exponents e(1.5, 3.0);
    const auto w = hardy::testing::random_interval(rng, 15, 1.5);
    EstimateConfig cfg;
    cfg.seed = 42;
    cfg.restarts = 3;
    const auto a = estimate_A(BoundaryCase::NN, w, e, cfg);
    const auto b = estimate_A(BoundaryCase::NN, w, e, cfg);
    CHECK(a.a_hat == b.a_hat);
    CHECK(std::vector<double>(a.maximizer.values().begin(), a.maximizer.values().end()) ==
          std::vector<double>(b.maximizer.values().begin(), b.maximizer.values().end()));
    cfg.parallel = false;
    const auto c = estimate_A(BoundaryCase::NN, w, e, cfg);
    CHECK(a.a_hat == c.a_hat);
}

TEST_CASE("rearranging the ND maximizer does not improve it") {
    Rng rng(9);
    for (auto [p, q] : {std::pair{2.0, 2.0}, {1.5, 3.0}, {3.0, 1.5}}) {
        const Exponents e(p, q);
        for (int trial = 0; trial < 8; ++trial) {
            const auto w = hardy::testing::random_interval(rng, 2 + rng() % 15, p);
            const auto r = estimate_A(BoundaryCase::ND, w, e);
            const Sequence y = decreasing_rearrange(r.maximizer);
            CHECK(ratio(BoundaryCase::ND, y, w, e) <= r.a_hat * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("estimate_A validates its configuration") {
    EstimateConfig cfg;
    cfg.restarts = -1;
    CHECK_THROWS_AS((void)estimate_A(BoundaryCase::ND, unit(0, 3), Exponents(2, 2), cfg), Error);
    CHECK_THROWS_AS((void)estimate_A(BoundaryCase::DD, unit(0, 1), Exponents(2, 2)), Error);
}

TEST_CASE("path eigenproblem with zero masses") {
    PathProblem pp;
    pp.mass = {1.0, 0.0, 2.0};
    pp.edge = {1.0, 1.0};
    pp.ground_left = 1.0;
    pp.ground_right = 0.0;
    // The massless middle node is a series connection: edges 1 and 1 give 1/2.
    PathProblem condensed;
    condensed.mass = {1.0, 2.0};
    condensed.edge = {0.5};
    condensed.ground_left = 1.0;
    const auto a = path_eigenpair(pp);
    const auto b = path_eigenpair(condensed);
    CHECK(rel_diff(a.lambda, b.lambda) <= 1e-13);
    CHECK(a.vector.size() == 3);
    CHECK(a.vector[1] == doctest::Approx(0.5 * (a.vector[0] + a.vector[2])).epsilon(1e-12));
}

TEST_CASE("sturm count brackets eigenvalues") {
    const std::vector<double> diag{2.0, 2.0, 2.0};
    const std::vector<double> off{-1.0, -1.0};
    // Eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2).
    CHECK(sturm_count(diag, off, 0.5) == 0);
    CHECK(sturm_count(diag, off, 0.6) == 1);
    CHECK(sturm_count(diag, off, 1.9) == 1);
    CHECK(sturm_count(diag, off, 2.1) == 2);
    CHECK(sturm_count(diag, off, 3.5) == 3);
    CHECK(sturm_count(diag, off, 0.0) == 0);
}
