#ifndef LOEWNER_FLOW_HPP
#define LOEWNER_FLOW_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "loewner/borel.hpp"  // SolverError
#include "loewner/coefficients.hpp"
#include "loewner/driving.hpp"
#include "loewner/rk.hpp"

namespace loewner {

struct GapCollapseError : SolverError {
    double t;
    std::complex<double> f;
    GapCollapseError(const std::string& msg, double t_, std::complex<double> f_)
        : SolverError(msg), t(t_), f(f_) {}
};
struct StepUnderflowError : SolverError {
    double t;
    StepUnderflowError(const std::string& msg, double t_) : SolverError(msg), t(t_) {}
};
struct BranchViolationError : SolverError {
    double t;
    BranchViolationError(const std::string& msg, double t_) : SolverError(msg), t(t_) {}
};
struct SeedResidualError : SolverError {
    using SolverError::SolverError;
};

struct FlowConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double min_gap = 1e-12;        // abort threshold on |f - lambda|
    double tau_switch = 1e-2;      // tau-form below this tau (cube-root driving)
    int n_seed = 4;                // asymptotic seed order for singular/branch starts
    double seed_bound = 1e-12;     // first omitted seed term must stay below this
    double delta_floor = 1e-8;     // branch seeding offset delta = max(floor, scale*t0)
    double delta_scale = 1e-4;
    double t_max = 1e-1;           // slit regime guard; operations reject beyond it
    bool extended_precision = false;  // integrate in 80-bit long double
    double trace_switch_frac = 2e-2;  // backward flow: sigma-substitution on [0, frac*t]
    double trace_residual_tol = 1e-6;
    double gap_stop = 2e-7;        // forward-residual stopping gap

    void validate() const;
};

struct FlowSample {
    double t;
    std::complex<double> f;
    long steps = 0;   // accepted steps up to this sample
    double gap = 0;   // |f - lambda(t)| at this sample
};

struct SeedInfo {
    std::string kind;  // "point", "singular+", "singular-", "branch+", "branch-"
    std::complex<double> value;
    double t_start = 0;
};

struct FlowTrajectory {
    SeedInfo seed;
    DrivingSpec driving;
    std::vector<FlowSample> samples;  // strictly increasing t; last is t_end
    RkStats stats;

    const FlowSample& back() const { return samples.back(); }
};

// Forward Loewner flow df/dt = 2/(f - lambda(t)) from f(t_start) = z.
// Cube-root driving integrates the tau-form dg/dtau = 6 tau^2/(g - tau)
// below tau_switch.  sample_times (strictly increasing, within range) are hit
// exactly; t_end is always recorded.
FlowTrajectory solve_forward(std::complex<double> z, double t_start, double t_end,
                             const DrivingSpec& driving, const FlowConfig& cfg,
                             std::vector<double> sample_times = {});

// Singular solutions through the origin, seeded by the truncated asymptotic
// series at t_seed (pass t_seed <= 0 to derive it from cfg.seed_bound).
// The trajectory is real; the plus branch stays above cbrt(t), minus below.
FlowTrajectory solve_singular(BranchSign branch, double t_seed, double t_end,
                              const FlowConfig& cfg, std::vector<double> sample_times = {});

// Branch solutions seeded at t0 + delta with the half-power series.
FlowTrajectory solve_branch(double t0, BranchSign sign, double t_end, const FlowConfig& cfg,
                            std::vector<double> sample_times = {});

struct MinGapResult {
    double gap;
    double argmin_t;
};

// Minimum of |f(eps, t) - cbrt(t)| over (0, t_end] along the flow from a real
// seed, tracked at every accepted step.
MinGapResult min_gap(double eps, double t_end, const FlowConfig& cfg);

// |f(z,t) - h1(f(z,t0), t - t0)| where h1 runs the shifted driving; the
// semigroup property makes this a two-route consistency residual.
double concatenation_check(std::complex<double> z, double t0, double t, const FlowConfig& cfg);

// Derived seeding helpers (exposed for tests and the CLI).
double default_singular_t_seed(BranchSign branch, int n_seed, double bound);

}  // namespace loewner

#endif
