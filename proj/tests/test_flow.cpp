#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "loewner/flow.hpp"
#include "loewner/trace.hpp"

using namespace loewner;
using C = std::complex<double>;

namespace {
// Closed form for the zero driving: f(z,t) = sqrt(z^2 + 4t) on the branch
// that keeps Im f >= 0 (the flow stays in the closed upper half plane).
C zero_driving_exact(C z, double t) {
    C s = std::sqrt(z * z + 4.0 * t);
    if (s.imag() < 0 || (s.imag() == 0 && z.real() < 0)) s = -s;
    return s;
}
}  // namespace

TEST_CASE("zero driving matches the closed form") {
    FlowConfig cfg;
    const C zs[] = {{1, 1}, {0.5, 0.5}, {-1, 2}, {3, 0.2}, {0.1, 1.5}};
    const double ts[] = {0.25, 1.0, 2.0, 4.0};
    for (C z : zs) {
        for (double t : ts) {
            auto traj = solve_forward(z, 0.0, t, DrivingSpec::zero(), cfg);
            const C exact = zero_driving_exact(z, t);
            CHECK(std::abs(traj.back().f - exact) <= 1e-8 * std::abs(exact));
        }
    }
}

TEST_CASE("zero driving: tip collapses onto the driving point") {
    FlowConfig cfg;
    // f(2i, t) = 2i sqrt(1-t) -> 0 as t -> 1
    auto before = solve_forward(C(0, 2), 0.0, 1.0 - 1e-6, DrivingSpec::zero(), cfg);
    CHECK(std::abs(before.back().f - C(0, 2e-3)) <= 1e-5);
    // pushing into the collapse itself is resolution limited; the state still
    // has to land near the driving point
    try {
        auto traj = solve_forward(C(0, 2), 0.0, 1.0, DrivingSpec::zero(), cfg);
        CHECK(std::abs(traj.back().f) <= 1e-3);
    } catch (const GapCollapseError& e) {
        CHECK(e.t > 0.999);
        CHECK(std::abs(e.f) <= 1e-3);
    }
}

TEST_CASE("hydrodynamic normalization for the cube-root driving") {
    FlowConfig cfg;
    const double t = 1e-2;
    double worst_c = 0;
    for (double mag : {10.0, 30.0, 100.0}) {
        const C z(0.3 * mag, mag);
        auto traj = solve_forward(z, 0.0, t, DrivingSpec::cube_root(), cfg);
        const C err = traj.back().f - z - 2.0 * t / z;
        const double c = std::abs(err) * std::abs(z) * std::abs(z);
        worst_c = std::max(worst_c, c);
    }
    CHECK(worst_c < 1.0);  // C stable and O(1) under |z| growth
}

TEST_CASE("forward flow preconditions") {
    FlowConfig cfg;
    CHECK_THROWS_AS(solve_forward(C(0, 1), 1.0, 0.5, DrivingSpec::zero(), cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_forward(C(0, -1), 0.0, 1.0, DrivingSpec::zero(), cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_forward(C(0, 0), 0.0, 1.0, DrivingSpec::cube_root(), cfg),
                    std::invalid_argument);
    FlowConfig bad = cfg;
    bad.rel_tol = -1;
    CHECK_THROWS_AS(solve_forward(C(0, 1), 0.0, 1.0, DrivingSpec::zero(), bad),
                    std::invalid_argument);
}

TEST_CASE("real seeds stay real and imaginary parts stay in the half plane") {
    FlowConfig cfg;
    auto traj = solve_forward(C(-0.5, 0), 0.0, 1e-2, DrivingSpec::cube_root(), cfg,
                              {1e-4, 1e-3, 5e-3});
    for (const auto& s : traj.samples) {
        CHECK(s.f.imag() == 0.0);
        CHECK(s.f.real() < 0);
    }
    // strictly increasing sample times
    for (size_t i = 1; i < traj.samples.size(); ++i)
        CHECK(traj.samples[i].t > traj.samples[i - 1].t);

    auto up = solve_forward(C(0.2, 0.7), 0.0, 1e-2, DrivingSpec::cube_root(), cfg, {1e-3});
    for (const auto& s : up.samples) CHECK(s.f.imag() >= 0.0);
}

TEST_CASE("singular solutions: asymptotics and ordering") {
    FlowConfig cfg;
    // f1(0,t) - (cbrt t + 6 cbrt(t^2) - 72 t) = o(t): check a log-log slope
    // above 1 on a refining grid
    double prev_rem = 0, prev_t = 0;
    double slope_min = 10;
    for (double t : {1e-5, 1e-6, 1e-7, 1e-8}) {
        auto tr = solve_singular(BranchSign::plus, 0.0, t, cfg);
        const double tau = std::cbrt(t);
        const double rem = tr.back().f.real() - (tau + 6 * tau * tau - 72 * t);
        if (prev_t > 0)
            slope_min = std::min(slope_min, std::log(prev_rem / rem) / std::log(prev_t / t));
        CHECK(rem > 0);
        prev_rem = rem;
        prev_t = t;
    }
    CHECK(slope_min > 1.0);

    // f2(0,t) = -3 cbrt(t^2) + o(cbrt(t^2))
    for (double t : {1e-6, 1e-8}) {
        auto tr = solve_singular(BranchSign::minus, 0.0, t, cfg);
        const double tau = std::cbrt(t);
        CHECK(std::abs(tr.back().f.real() + 3 * tau * tau) <= 10 * t);
    }

    // ordering f2 < cbrt t < f1 along shared sample times
    std::vector<double> grid = {1e-6, 1e-5, 1e-4, 1e-3};
    auto p = solve_singular(BranchSign::plus, 0.0, 1e-2, cfg, grid);
    auto m = solve_singular(BranchSign::minus, 0.0, 1e-2, cfg, grid);
    REQUIRE(p.samples.size() == m.samples.size());
    for (size_t i = 1; i < p.samples.size(); ++i) {
        const double lam = std::cbrt(p.samples[i].t);
        CHECK(m.samples[i].f.real() < lam);
        CHECK(lam < p.samples[i].f.real());
    }
}

TEST_CASE("singular seeding is robust to order and seed time") {
    const double t = 1e-3;
    FlowConfig a;
    a.n_seed = 3;
    FlowConfig b;
    b.n_seed = 5;
    const double t_seed_a = default_singular_t_seed(BranchSign::plus, a.n_seed, a.seed_bound);
    auto ra = solve_singular(BranchSign::plus, t_seed_a, t, a);
    auto rb = solve_singular(BranchSign::plus, t_seed_a / 4.0, t, b);
    CHECK(std::abs(ra.back().f.real() - rb.back().f.real()) < 1e-8);
}

TEST_CASE("branch solutions behave like the half-power expansion") {
    FlowConfig cfg;
    const double t0 = 1e-3;

    // near-seed square-root growth: f1(z0,t) - cbrt(t0) ~ 2 sqrt(t - t0)
    for (double d : {1e-6, 4e-6}) {
        auto tr = solve_branch(t0, BranchSign::plus, t0 + d, cfg);
        const double growth = tr.back().f.real() - std::cbrt(t0);
        CHECK(growth == doctest::Approx(2 * std::sqrt(d)).epsilon(2e-2));
    }

    // both signs bracket the driving function just after t0
    const double t = t0 * 1.5;
    auto up = solve_branch(t0, BranchSign::plus, t, cfg);
    auto dn = solve_branch(t0, BranchSign::minus, t, cfg);
    CHECK(dn.back().f.real() < std::cbrt(t));
    CHECK(std::cbrt(t) < up.back().f.real());

    // f1(z0,t) - cbrt(t) increases along samples in the slit window
    std::vector<double> grid;
    for (double s = t0 * 1.1; s < 9e-3; s *= 1.3) grid.push_back(s);
    auto tr = solve_branch(t0, BranchSign::plus, 1e-2, cfg, grid);
    double prev = 0;
    for (const auto& s : tr.samples) {
        if (s.t <= t0 * 1.05) continue;
        const double gap = s.f.real() - std::cbrt(s.t);
        CHECK(gap > prev);
        prev = gap;
    }

    CHECK_THROWS_AS(solve_branch(-1.0, BranchSign::plus, 1e-2, cfg), std::invalid_argument);
    CHECK_THROWS_AS(solve_branch(1e-3, BranchSign::plus, 0.5, cfg), std::invalid_argument);
}

TEST_CASE("min gap diagnostics") {
    FlowConfig cfg;
    // negative eps: f moves left, lambda right; the minimum sits at t = 0
    auto neg = min_gap(-0.1, 1e-2, cfg);
    CHECK(neg.gap >= 0.1 * (1 - 1e-9));
    // positive eps: gap dips but stays positive; argmin near eps^3 scale
    auto pos = min_gap(0.1, 1e-2, cfg);
    CHECK(pos.gap > 0);
    CHECK(pos.gap < 0.1);
    CHECK(pos.argmin_t > 0);
    CHECK(pos.argmin_t < 1e-2);
    CHECK_THROWS_AS(min_gap(0.0, 1e-2, cfg), std::invalid_argument);
}

TEST_CASE("concatenation through the shifted driving") {
    FlowConfig cfg;
    CHECK(concatenation_check(C(0, 2), 1e-3, 1e-2, cfg) <= 10 * cfg.rel_tol);
    CHECK(concatenation_check(C(0, 5), 5e-3, 1e-2, cfg) <= 10 * cfg.rel_tol);
    // t0 -> t limit: residual collapses
    CHECK(concatenation_check(C(0, 2), 1e-2 - 1e-9, 1e-2, cfg) <= 10 * cfg.rel_tol);
    CHECK_THROWS_AS(concatenation_check(C(0, 2), 1e-2, 1e-3, cfg), std::invalid_argument);
}

TEST_CASE("trace: zero driving closed form") {
    FlowConfig cfg;
    cfg.t_max = 5;
    // the forward-collapse residual scales like sqrt(t); at t of order one it
    // cannot reach the 1e-6 regime of the small-t grids
    cfg.trace_residual_tol = 5e-5;
    for (double t : {0.25, 1.0, 4.0}) {
        auto p = trace_point(t, DrivingSpec::zero(), cfg);
        CHECK(p.ok);
        CHECK(std::abs(p.gamma - C(0, 2 * std::sqrt(t))) <= 1e-6);
        CHECK(p.residual <= 5e-5);
        CHECK_FALSE(p.residual_warn);
    }
}

TEST_CASE("trace: cube-root driving") {
    FlowConfig cfg;
    // |gamma| decreases monotonically toward 0 on a decreasing grid
    double prev = 1e9;
    for (double t : {1e-2, 1e-3, 1e-4, 1e-5}) {
        auto p = trace_point(t, cfg);
        CHECK(p.ok);
        CHECK(p.gamma.imag() > 0);
        CHECK(std::abs(p.gamma) < prev);
        prev = std::abs(p.gamma);
        CHECK(p.residual <= 1e-6);  // backward/forward prime-end residual
    }

    // single-point curve consistency
    auto tr = trace_curve({1e-3}, DrivingSpec::cube_root(), cfg);
    REQUIRE(tr.points.size() == 1);
    auto p = trace_point(1e-3, cfg);
    CHECK(std::abs(tr.points[0].gamma - p.gamma) == 0.0);

    CHECK_THROWS_AS(trace_point(-1.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(trace_point(1.0, cfg), std::invalid_argument);  // beyond t_max
}

TEST_CASE("trace curve flags failures per point") {
    FlowConfig cfg;
    auto tr = trace_curve({1e-4, 1e-3}, DrivingSpec::cube_root(), cfg);
    CHECK(tr.points[0].ok);
    CHECK(tr.points[1].ok);
    CHECK_THROWS_AS(trace_curve({1e-3, 1e-4}, DrivingSpec::cube_root(), cfg),
                    std::invalid_argument);

    // an unsatisfiable tolerance drives the stepper into underflow; the curve
    // run flags the point and keeps going
    FlowConfig impossible = cfg;
    impossible.rel_tol = 1e-30;
    impossible.abs_tol = 1e-32;
    auto bad = trace_curve({1e-4, 1e-3}, DrivingSpec::cube_root(), impossible,
                           /*check_residual=*/false);
    REQUIRE(bad.points.size() == 2);
    CHECK_FALSE(bad.points[0].ok);
    CHECK_FALSE(bad.points[1].ok);
    CHECK_FALSE(bad.points[0].error.empty());
}

TEST_CASE("extended precision path agrees with double") {
    FlowConfig d, x;
    x.extended_precision = true;
    auto fd = solve_forward(C(0, 2), 0.0, 1e-2, DrivingSpec::cube_root(), d);
    auto fx = solve_forward(C(0, 2), 0.0, 1e-2, DrivingSpec::cube_root(), x);
    CHECK(std::abs(fd.back().f - fx.back().f) < 1e-9);
    auto sd = solve_singular(BranchSign::plus, 0.0, 1e-4, d);
    auto sx = solve_singular(BranchSign::plus, 0.0, 1e-4, x);
    CHECK(std::abs(sd.back().f.real() - sx.back().f.real()) < 1e-10);
}
