#include "loewner/trace.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

namespace {

// Backward flow in the sigma = sqrt(s) launch variable followed by plain s
// stepping.  Double precision is enough for every in-spec grid; the launch
// asymptotics remove the non-Lipschitz start.
std::complex<double> backward_flow(double t, const DrivingSpec& driving, const FlowConfig& cfg,
                                   RkStats& stats) {
    using C = std::complex<double>;
    // gamma feeds a forward run whose sensitivity grows like sqrt(t/(t-s))
    // near the tip, so the backward solve runs tighter than the general cfg
    const double rel = std::min(cfg.rel_tol, 1e-12);
    const double abs = std::min(cfg.abs_tol, 1e-14);
    const double s_switch = std::min(cfg.trace_switch_frac * t, t);
    const double sig_end = std::sqrt(s_switch);
    const double sig0 = 1e-9 * std::sqrt(t);

    // h(sigma) = lambda(t) + 2 i sigma - (lambda'(t)/3) sigma^2 + O(sigma^3)
    const double lam_t = driving.lambda(t);
    double dlam_t = 0;
    if (driving.kind != DrivingSpec::Kind::zero) dlam_t = driving.dlambda(t);
    C h(lam_t - dlam_t / 3.0 * sig0 * sig0, 2.0 * sig0);

    auto rhs_sigma = [&](double sig, const C& y) -> C {
        return -4.0 * sig / (y - C(driving.lambda(t - sig * sig)));
    };
    Dopri5<double, C> stepper_sigma(rhs_sigma, rel, abs);
    auto rc = stepper_sigma.integrate(sig0, sig_end, h, stats);
    if (rc != StepOutcome::done)
        throw StepUnderflowError("trace backward flow failed in the launch phase at t = " +
                                     std::to_string(t),
                                 t);
    if (s_switch < t) {
        auto rhs_s = [&](double s, const C& y) -> C {
            return -2.0 / (y - C(driving.lambda(t - s)));
        };
        Dopri5<double, C> stepper_s(rhs_s, rel, abs);
        rc = stepper_s.integrate(s_switch, t, h, stats);
        if (rc != StepOutcome::done)
            throw StepUnderflowError("trace backward flow failed at t = " + std::to_string(t), t);
    }
    return h;
}

}  // namespace

double forward_residual(double t, std::complex<double> gamma, const DrivingSpec& driving,
                        const FlowConfig& cfg) {
    // run the forward flow with min_gap replaced by the stop gap; the collapse
    // is expected here, unlike in plain solve_forward.  The run needs tighter
    // tolerances than the backward solve: explicit steps into the square-root
    // collapse lag by roughly tol^{2/5} sqrt(t).
    FlowConfig fwd = cfg;
    fwd.min_gap = cfg.gap_stop;
    fwd.rel_tol = std::min(cfg.rel_tol, 1e-12);
    fwd.abs_tol = std::min(cfg.abs_tol, 1e-15);
    const double lam_t = driving.lambda(t);
    try {
        const auto traj = solve_forward(gamma, 0.0, t, driving, fwd);
        return std::abs(traj.back().f - std::complex<double>(lam_t));
    } catch (const GapCollapseError& e) {
        return std::abs(e.f - std::complex<double>(lam_t));
    }
}

TracePoint trace_point(double t, const DrivingSpec& driving, const FlowConfig& cfg,
                       bool check_residual) {
    cfg.validate();
    if (t <= 0) throw std::invalid_argument("trace_point: t must be positive");
    if (t > cfg.t_max)
        throw std::invalid_argument("trace_point: t exceeds t_max (slit regime guard)");
    TracePoint p;
    p.t = t;
    RkStats stats;
    p.gamma = backward_flow(t, driving, cfg, stats);
    p.substeps = stats.accepted;
    if (p.gamma.imag() < 0) p.gamma.imag(0.0);  // clip roundoff below the axis
    p.ok = true;
    if (check_residual) {
        p.residual = forward_residual(t, p.gamma, driving, cfg);
        p.residual_warn = p.residual > cfg.trace_residual_tol;
    }
    return p;
}

TracePoint trace_point(double t, const FlowConfig& cfg, bool check_residual) {
    return trace_point(t, DrivingSpec::cube_root(), cfg, check_residual);
}

Trace trace_curve(const std::vector<double>& t_grid, const DrivingSpec& driving,
                  const FlowConfig& cfg, bool check_residual) {
    std::vector<double> grid = t_grid;
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("trace_curve: grid must be increasing");
    Trace tr;
    tr.points.reserve(grid.size());
    for (double t : grid) {
        try {
            tr.points.push_back(trace_point(t, driving, cfg, check_residual));
        } catch (const SolverError& e) {
            TracePoint p;
            p.t = t;
            p.ok = false;
            p.error = e.what();
            tr.points.push_back(std::move(p));
        }
    }
    return tr;
}

}  // namespace loewner
