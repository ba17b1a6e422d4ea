#ifndef LOEWNER_TRACE_HPP
#define LOEWNER_TRACE_HPP

#include <complex>
#include <string>
#include <vector>

#include "loewner/flow.hpp"

namespace loewner {

struct TracePoint {
    double t = 0;
    std::complex<double> gamma{};
    double residual = -1;  // |f(gamma(t), t) - lambda(t)|; -1 when not computed
    long substeps = 0;     // accepted backward steps
    bool ok = false;
    bool residual_warn = false;
    std::string error;     // populated when ok is false
};

struct Trace {
    std::vector<TracePoint> points;
};

// gamma(t) = f^{-1}(lambda(t), t) by the downward flow
//   dh/ds = -2/(h - lambda(t - s)),  h(0) = lambda(t) + i 0+,  s in [0, t],
// started in the sigma = sqrt(s) variable where h = lambda(t) + 2 i sigma
// resolves the square-root launch.  check_residual re-runs the forward flow
// from gamma(t) and records the prime-end residual.
TracePoint trace_point(double t, const DrivingSpec& driving, const FlowConfig& cfg,
                       bool check_residual = true);

// Convenience overload for the cube-root driving.
TracePoint trace_point(double t, const FlowConfig& cfg, bool check_residual = true);

// trace_point over a grid; per-point failures are flagged, not fatal.
Trace trace_curve(const std::vector<double>& t_grid, const DrivingSpec& driving,
                  const FlowConfig& cfg, bool check_residual = true);

// Forward run from z = gamma(t) until the gap collapses to cfg.gap_stop (or
// t is reached); returns |f - lambda(t)| at the stop.
double forward_residual(double t, std::complex<double> gamma, const DrivingSpec& driving,
                        const FlowConfig& cfg);

}  // namespace loewner

#endif
