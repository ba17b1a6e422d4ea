#include "loewner/flow.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

namespace {

template <class Real>
using Cplx = std::complex<Real>;

enum class StopReason { none, gap_collapse, external };

// Shared integration core: cube-root driving runs the tau-form
// dg/dtau = 6 tau^2/(g - tau) below t_switch = tau_switch^3 and the plain
// t-form above; other drivings use the t-form throughout.
template <class Real, class State>
class LoewnerIntegrator {
public:
    LoewnerIntegrator(const DrivingSpec& driving, const FlowConfig& cfg)
        : driving_(driving),
          rel_tol_(Real(cfg.rel_tol)),
          abs_tol_(Real(cfg.abs_tol)),
          min_gap_(Real(cfg.min_gap)),
          t_switch_(driving.needs_tau_form()
                        ? Real(cfg.tau_switch) * Real(cfg.tau_switch) * Real(cfg.tau_switch)
                        : Real(0)) {}

    // called at every accepted step with (t, f); return false to stop
    std::function<bool(Real, const State&)> step_monitor;

    RkStats stats;

    bool stop_requested() const { return reason_ != StopReason::none; }

    // Integrate from (t_from, y) to t_to, landing exactly on each sample time
    // in (t_from, t_to]; record(t, y) fires at every landed time plus t_to.
    template <class Record>
    void run(Real t_from, Real t_to, State& y, const std::vector<Real>& sample_times,
             const Record& record) {
        Real t = t_from;
        for (Real ts : sample_times) {
            if (ts <= t || ts > t_to) continue;
            leg(t, ts, y);
            t = ts;
            if (stop_requested()) return;
            record(t, y);
        }
        if (t < t_to) {
            leg(t, t_to, y);
            if (!stop_requested()) record(t_to, y);
        }
    }

private:
    Real gap(Real t, const State& f) const {
        return detail::state_abs(f - State(driving_.template lambda<Real>(t)));
    }

    bool accept(Real t, const State& y) {
        if (gap(t, y) < min_gap_) {
            reason_ = StopReason::gap_collapse;
            stop_t_ = t;
            stop_state_ = y;
            return false;
        }
        if (step_monitor && !step_monitor(t, y)) {
            reason_ = StopReason::external;
            return false;
        }
        return true;
    }

    void leg(Real a, Real b, State& y) {
        if (driving_.needs_tau_form() && a < t_switch_) {
            const Real b1 = std::min(b, t_switch_);
            run_tau(std::cbrt(a), std::cbrt(b1), y);
            if (stop_requested()) return;
            if (b > b1) run_t(b1, b, y);
        } else {
            run_t(a, b, y);
        }
    }

    void run_t(Real t0, Real t1, State& y) {
        auto rhs = [this](Real t, const State& f) -> State {
            return Real(2) / (f - State(driving_.template lambda<Real>(t)));
        };
        Dopri5<Real, State> stepper(rhs, rel_tol_, abs_tol_);
        const auto rc = stepper.integrate(
            t0, t1, y, stats, [this](Real t, const State& s) { return accept(t, s); });
        finish(rc, t1);
    }

    void run_tau(Real tau0, Real tau1, State& y) {
        auto rhs = [](Real tau, const State& g) -> State {
            return Real(6) * tau * tau / (g - State(tau));
        };
        Dopri5<Real, State> stepper(rhs, rel_tol_, abs_tol_);
        const auto rc = stepper.integrate(tau0, tau1, y, stats, [this](Real tau, const State& s) {
            return accept(tau * tau * tau, s);
        });
        finish(rc, tau1 * tau1 * tau1);
    }

    void finish(StepOutcome rc, Real t_nominal) const {
        if (rc == StepOutcome::step_underflow)
            throw StepUnderflowError(
                "step size underflow near t = " + std::to_string(static_cast<double>(t_nominal)),
                static_cast<double>(t_nominal));
        if (reason_ == StopReason::gap_collapse)
            throw GapCollapseError("singular approach: |f - lambda(t)| fell below min_gap at t = " +
                                       std::to_string(static_cast<double>(stop_t_)),
                                   static_cast<double>(stop_t_), to_cd(stop_state_));
    }

    static std::complex<double> to_cd(const Cplx<Real>& v) {
        return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    static std::complex<double> to_cd(Real v) { return {static_cast<double>(v), 0.0}; }

    DrivingSpec driving_;
    Real rel_tol_, abs_tol_, min_gap_, t_switch_;
    StopReason reason_ = StopReason::none;
    Real stop_t_{};
    State stop_state_{};
};

template <class Real>
std::vector<Real> to_real_vector(const std::vector<double>& v) {
    return std::vector<Real>(v.begin(), v.end());
}

template <class Real>
FlowTrajectory solve_forward_impl(std::complex<double> z, double t_start, double t_end,
                                  const DrivingSpec& driving, const FlowConfig& cfg,
                                  const std::vector<double>& sample_times) {
    FlowTrajectory out;
    out.seed = {"point", z, t_start};
    out.driving = driving;
    LoewnerIntegrator<Real, Cplx<Real>> integ(driving, cfg);
    Cplx<Real> y(Real(z.real()), Real(z.imag()));
    auto push = [&](double t, std::complex<double> f) {
        const double gap = std::abs(f - std::complex<double>(driving.lambda(t)));
        out.samples.push_back({t, f, integ.stats.accepted, gap});
    };
    push(t_start, z);
    integ.run(Real(t_start), Real(t_end), y, to_real_vector<Real>(sample_times),
              [&](Real t, const Cplx<Real>& f) {
                  push(static_cast<double>(t),
                       {static_cast<double>(f.real()), static_cast<double>(f.imag())});
              });
    out.stats = integ.stats;
    return out;
}

template <class Real>
FlowTrajectory solve_real_impl(SeedInfo seed, double t_end, BranchSign sign, const FlowConfig& cfg,
                               const std::vector<double>& sample_times) {
    FlowTrajectory out;
    out.seed = seed;
    out.driving = DrivingSpec::cube_root();
    LoewnerIntegrator<Real, Real> integ(out.driving, cfg);
    const Real dir = sign == BranchSign::plus ? Real(1) : Real(-1);
    double violation_t = -1;
    integ.step_monitor = [&](Real t, const Real& f) {
        if (dir * (f - out.driving.lambda(t)) <= Real(0)) {
            violation_t = static_cast<double>(t);
            return false;
        }
        return true;
    };
    Real y = Real(seed.value.real());
    auto push = [&](double t, double f) {
        const double gap = std::abs(f - out.driving.lambda(t));
        out.samples.push_back({t, {f, 0.0}, integ.stats.accepted, gap});
    };
    push(seed.t_start, seed.value.real());
    integ.run(Real(seed.t_start), Real(t_end), y, to_real_vector<Real>(sample_times),
              [&](Real t, const Real& f) { push(static_cast<double>(t), static_cast<double>(f)); });
    if (violation_t >= 0)
        throw BranchViolationError(
            "branch ordering violated: sign of f - cbrt(t) flipped at t = " +
                std::to_string(violation_t),
            violation_t);
    out.stats = integ.stats;
    return out;
}

}  // namespace

void FlowConfig::validate() const {
    if (rel_tol <= 0 || abs_tol <= 0)
        throw std::invalid_argument("FlowConfig: tolerances must be positive");
    if (tau_switch <= 0) throw std::invalid_argument("FlowConfig: tau_switch must be positive");
    if (n_seed < 3) throw std::invalid_argument("FlowConfig: n_seed must be >= 3");
    if (t_max <= 0) throw std::invalid_argument("FlowConfig: t_max must be positive");
}

double default_singular_t_seed(BranchSign branch, int n_seed, double bound) {
    const ExactSeries s = branch == BranchSign::plus ? singular_plus_coeffs(n_seed + 1)
                                                     : singular_minus_coeffs(n_seed + 1);
    const double an1 = std::abs(s.coeff(n_seed + 1).to_double());
    const double tau = std::pow(bound / an1, 1.0 / (n_seed + 1));
    return tau * tau * tau;
}

FlowTrajectory solve_forward(std::complex<double> z, double t_start, double t_end,
                             const DrivingSpec& driving, const FlowConfig& cfg,
                             std::vector<double> sample_times) {
    cfg.validate();
    if (!(t_end > t_start) || t_start < 0)
        throw std::invalid_argument("solve_forward: need 0 <= t_start < t_end");
    if (z.imag() < 0) throw std::invalid_argument("solve_forward: seed must satisfy Im z >= 0");
    if (z == std::complex<double>(0, 0) && driving.kind != DrivingSpec::Kind::shifted_cube_root)
        throw std::invalid_argument("solve_forward: z = 0 is the hull base point");
    std::sort(sample_times.begin(), sample_times.end());
    if (cfg.extended_precision)
        return solve_forward_impl<long double>(z, t_start, t_end, driving, cfg, sample_times);
    return solve_forward_impl<double>(z, t_start, t_end, driving, cfg, sample_times);
}

FlowTrajectory solve_singular(BranchSign branch, double t_seed, double t_end, const FlowConfig& cfg,
                              std::vector<double> sample_times) {
    cfg.validate();
    if (t_seed <= 0) {
        // a smaller seed time only shrinks the first omitted term, so clamping
        // below t_end keeps the seed bound valid for very small targets
        t_seed = std::min(default_singular_t_seed(branch, cfg.n_seed, cfg.seed_bound), t_end / 8);
    }
    if (!(t_seed < t_end)) throw std::invalid_argument("solve_singular: need t_seed < t_end");
    const ExactSeries s = branch == BranchSign::plus ? singular_plus_coeffs(cfg.n_seed)
                                                     : singular_minus_coeffs(cfg.n_seed);
    const double tau_seed = std::cbrt(t_seed);
    double f0 = 0;
    for (int n = cfg.n_seed; n >= 1; --n) f0 = f0 * tau_seed + s.coeff(n).to_double();
    f0 *= tau_seed;
    SeedInfo seed{branch == BranchSign::plus ? "singular+" : "singular-", {f0, 0.0}, t_seed};
    std::sort(sample_times.begin(), sample_times.end());
    if (cfg.extended_precision)
        return solve_real_impl<long double>(seed, t_end, branch, cfg, sample_times);
    return solve_real_impl<double>(seed, t_end, branch, cfg, sample_times);
}

FlowTrajectory solve_branch(double t0, BranchSign sign, double t_end, const FlowConfig& cfg,
                            std::vector<double> sample_times) {
    cfg.validate();
    if (t0 <= 0) throw std::invalid_argument("solve_branch: t0 must be positive");
    if (!(t0 < t_end)) throw std::invalid_argument("solve_branch: need t0 < t_end");
    if (t_end > cfg.t_max)
        throw std::invalid_argument("solve_branch: t_end exceeds t_max (slit regime guard)");

    const double delta = std::max(cfg.delta_floor, cfg.delta_scale * t0);
    const int n_seed = std::max(cfg.n_seed, 3);
    const ExactSeries b = branch_half_coeffs(Rational(t0), n_seed, sign);

    // value and t-derivative of the half-power seed at t0 + delta
    const double u = std::sqrt(delta);
    double f0 = b.offset.to_double(), df0 = 0;
    std::vector<double> upow(static_cast<size_t>(n_seed) + 1);
    upow[0] = 1;
    for (int n = 1; n <= n_seed; ++n) upow[static_cast<size_t>(n)] = upow[static_cast<size_t>(n - 1)] * u;
    for (int n = 1; n <= n_seed; ++n) {
        const double bn = b.coeff(n).to_double();
        f0 += bn * upow[static_cast<size_t>(n)];
        df0 += 0.5 * n * bn * (n == 1 ? 1.0 / u : upow[static_cast<size_t>(n - 2)]);
    }
    const double lam = std::cbrt(t0 + delta);
    const double seed_res = std::abs(df0 * (f0 - lam) - 2.0);
    if (seed_res > 1e-4)
        throw SeedResidualError(
            "solve_branch: seeded series violates the flow equation, residual = " +
            std::to_string(seed_res));

    SeedInfo seed{sign == BranchSign::plus ? "branch+" : "branch-", {f0, 0.0}, t0 + delta};
    std::sort(sample_times.begin(), sample_times.end());
    if (cfg.extended_precision)
        return solve_real_impl<long double>(seed, t_end, sign, cfg, sample_times);
    return solve_real_impl<double>(seed, t_end, sign, cfg, sample_times);
}

MinGapResult min_gap(double eps, double t_end, const FlowConfig& cfg) {
    cfg.validate();
    if (eps == 0) throw std::invalid_argument("min_gap: eps must be nonzero");
    if (t_end <= 0) throw std::invalid_argument("min_gap: t_end must be positive");

    const DrivingSpec drv = DrivingSpec::cube_root();
    MinGapResult best{std::abs(eps), 0.0};
    auto consider = [&](double t, std::complex<double> f) {
        const double g = std::abs(f - std::complex<double>(drv.lambda(t)));
        if (g < best.gap) best = {g, t};
    };

    std::vector<double> samples;
    for (double t = t_end; t > 1e-13 * t_end; t /= 1.1) samples.push_back(t);
    std::sort(samples.begin(), samples.end());

    LoewnerIntegrator<double, std::complex<double>> integ(drv, cfg);
    integ.step_monitor = [&](double t, const std::complex<double>& f) {
        consider(t, f);
        return true;
    };
    std::complex<double> y(eps, 0.0);
    integ.run(0.0, t_end, y, samples,
              [&](double t, const std::complex<double>& f) { consider(t, f); });
    return best;
}

double concatenation_check(std::complex<double> z, double t0, double t, const FlowConfig& cfg) {
    cfg.validate();
    if (!(t0 > 0) || !(t0 < t)) throw std::invalid_argument("concatenation_check: need 0 < t0 < t");
    const auto direct = solve_forward(z, 0.0, t, DrivingSpec::cube_root(), cfg);
    const auto stage1 = solve_forward(z, 0.0, t0, DrivingSpec::cube_root(), cfg);
    const auto stage2 = solve_forward(stage1.back().f, 0.0, t - t0, DrivingSpec::shifted(t0), cfg);
    return std::abs(direct.back().f - stage2.back().f);
}

}  // namespace loewner
