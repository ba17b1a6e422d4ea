#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "loewner/borel.hpp"
#include "loewner/coefficients.hpp"
#include "loewner/flow.hpp"

using namespace loewner;

TEST_CASE("borel transform: exact factorial damping") {
    auto plus = singular_plus_coeffs(200);
    auto tr = borel_transform(plus);
    CHECK(tr.coeff(1) == 1);
    CHECK(tr.coeff(2) == 3);
    CHECK(tr.coeff(3) == -12);  // -72/3!
    CHECK(tr.coeff(4) == 90);
    CHECK(tr.coeff(5) == Rational(-3888, 5));
    // coeff * n! reproduces a_n exactly
    Int fact = 1;
    for (int n = 1; n <= 200; ++n) {
        fact *= n;
        CHECK(tr.coeff(n) * Rational(fact) == plus.coeff(n).part(0));
    }
    // empirical radius: the Lemma 1 window in tau, estimator error bar aside.
    // The tail sits right at the lower-bound edge 1/6.
    const double lo = 1.0 / (12.0 * std::exp(1.0)), hi = 1.0 / 6.0;
    CHECK(tr.radius_estimate + tr.radius_error >= lo);
    CHECK(tr.radius_estimate - tr.radius_error <= hi);
    CHECK(tr.radius_estimate == doctest::Approx(1.0 / 6.0).epsilon(2e-3));

    auto half = branch_half_coeffs(Rational(1), 6);
    CHECK_THROWS_AS(borel_transform(half), std::invalid_argument);
}

TEST_CASE("pade continuation") {
    auto tr = borel_transform(singular_plus_coeffs(40));

    // (m,k) = (1,0): linear truncation, value 0 at the origin
    auto lin = pade_continuation(tr, 1, 0);
    CHECK(lin.eval(0.0) == 0.0);
    CHECK(lin.num[1] == 1);

    // inside the disk the continuation matches direct summation
    auto ap = pade_continuation(tr, 6, 6);
    const double tau = 1.0 / 24.0;
    double direct = 0;
    for (int n = 40; n >= 1; --n) direct = (direct + to_double(tr.coeff(n))) * tau;
    CHECK(std::abs(ap.eval(tau) - direct) <= 1e-10 * std::abs(direct));

    // positive real poles are reported, not dropped (frozen: (6,6) has two)
    CHECK(ap.positive_real_poles.size() == 2);
    CHECK(ap.positive_real_poles[0] == doctest::Approx(1.2560686).epsilon(1e-4));

    CHECK_THROWS_AS(pade_continuation(tr, 30, 30), std::invalid_argument);
}

TEST_CASE("pade degenerate system reports failure") {
    // geometric tail: tau/(1-tau) is exactly [1,1], so the (2,2) denominator
    // system is rank deficient
    BorelTransform t;
    t.coeffs = {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
    t.radius_estimate = 1;
    CHECK_THROWS_AS(pade_continuation(t, 2, 2), PadeDegenerateError);
}

TEST_CASE("borel sum basics") {
    auto tr = borel_transform(singular_plus_coeffs(60));
    QuadratureConfig quad;

    CHECK(borel_sum(0.0, tr, quad).value == 0.0);

    // leading asymptotics: h(tau) = tau + 6 tau^2 - 72 tau^3 + O(tau^4); the
    // tau^3 coefficient is -72, so the remainder after two terms is 72 tau^3
    // to leading order
    const double tau = 1e-3;
    auto r = borel_sum(tau, tr, quad);
    const double rem2 = r.value - tau - 6 * tau * tau;
    CHECK(std::abs(rem2 + 72 * tau * tau * tau) <= 10 * 2160 * std::pow(tau, 4) + 1e-12);
    CHECK(r.error_estimate < 1e-8);
    CHECK(r.quad_error <= 1e-9);

    CHECK_THROWS_AS(borel_sum(-0.5, tr, quad), std::invalid_argument);
}

TEST_CASE("borel sum matches the singular ODE branch") {
    auto tr = borel_transform(singular_plus_coeffs(60));
    QuadratureConfig quad;
    FlowConfig fc;
    for (double tau : {1e-3, 1e-2}) {
        const double t = tau * tau * tau;
        auto b = borel_sum(tau, tr, quad);
        auto ode = solve_singular(BranchSign::plus, 0.0, t, fc);
        const double ref = ode.back().f.real();
        const double combined = b.error_estimate + fc.rel_tol * std::abs(ref) + fc.abs_tol;
        CHECK(std::abs(b.value - ref) <= combined);
    }
}

TEST_CASE("pole on the integration ray is detected") {
    auto tr = borel_transform(singular_plus_coeffs(60));
    QuadratureConfig quad;
    quad.primary_order = 6;  // the (6,6) approximant has poles at 1.256, 3.52
    CHECK_THROWS_AS(borel_sum(0.1, tr, quad), PoleOnRayError);
}

TEST_CASE("divergence witness: terms eventually increase for fixed tau") {
    // |a_{n+1}/a_n| grows like 6(n+2), so the terms turn around near
    // n = 1/(6 tau) and increase from there on
    const int n_max = 200;
    auto plus = singular_plus_coeffs(n_max);
    std::vector<double> logterm(static_cast<size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) logterm[static_cast<size_t>(n)] = log_abs(plus.coeff(n).part(0));
    for (double tau : {1e-3, 1e-2, 1e-1}) {
        int last_decrease = 0;
        for (int n = 2; n <= n_max; ++n) {
            const double cur = logterm[static_cast<size_t>(n)] + n * std::log(tau);
            const double prev = logterm[static_cast<size_t>(n - 1)] + (n - 1) * std::log(tau);
            if (cur <= prev) last_decrease = n;
        }
        CHECK(last_decrease < n_max - 20);                    // nonempty increasing tail
        CHECK(last_decrease <= 1.0 / (6.0 * tau) + 5);        // onset follows the ratio law
    }
}

TEST_CASE("minus family runs through the same pipeline") {
    // same transform/continuation/integral machinery on sum a_n^- tau^n
    auto minus = singular_minus_coeffs(60);
    auto tr = borel_transform(minus);
    CHECK(tr.coeff(2) == Rational(-3, 2));
    QuadratureConfig quad;
    const double tau = 1e-2;
    auto b = borel_sum(tau, tr, quad);
    FlowConfig fc;
    auto ode = solve_singular(BranchSign::minus, 0.0, tau * tau * tau, fc);
    const double ref = ode.back().f.real();
    CHECK(std::abs(b.value - ref) <= b.error_estimate + fc.rel_tol * std::abs(ref) + fc.abs_tol);
}

TEST_CASE("borel sum minus partial sums follows the O(tau^{n+1}) law") {
    auto tr = borel_transform(singular_plus_coeffs(60));
    auto plus = singular_plus_coeffs(6);
    QuadratureConfig quad;
    quad.abs_tol = 1e-14;  // the n = 3, 4 remainders sit near the default floor
    auto remainder = [&](int n, double tau) {
        double partial = 0;
        for (int k = n; k >= 1; --k) partial = (partial + plus.coeff(k).to_double()) * tau;
        return std::abs(borel_sum(tau, tr, quad).value - partial);
    };
    // log-log slope of the remainder vs tau is n + 1 within +-0.2
    for (int n = 1; n <= 4; ++n) {
        const double lo = n <= 2 ? 1e-4 : 1e-3;
        const double hi = 1e-2;
        const double slope =
            std::log(remainder(n, hi) / remainder(n, lo)) / std::log(hi / lo);
        CHECK(slope == doctest::Approx(n + 1).epsilon(0.2 / (n + 1)));
    }
}

TEST_CASE("continuation vs direct summation inside the disk") {
    auto tr = borel_transform(singular_plus_coeffs(120));
    auto ap = pade_continuation(tr, 8, 8);
    for (double tau : {0.01, 0.02, 0.04}) {  // inside ~ half the radius
        double direct = 0;
        for (int n = 120; n >= 1; --n) direct = (direct + to_double(tr.coeff(n))) * tau;
        CHECK(std::abs(ap.eval(tau) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    }
}
