#ifndef LOEWNER_ANALYSIS_HPP
#define LOEWNER_ANALYSIS_HPP

#include <array>
#include <string>
#include <vector>

#include "loewner/flow.hpp"
#include "loewner/trace.hpp"

namespace loewner {

// Harmonic measures of the two slit sides seen from the pre-image of i,
// reduced by conformal invariance to arctan angle differences on the real
// line: alpha_1 = arctan f1(0,t) - arctan cbrt(t), alpha_2 likewise below.
struct HarmonicMeasures {
    double t = 0;
    double f1 = 0, f2 = 0;      // singular endpoints f1(0,t), f2(0,t)
    double alpha1 = 0, alpha2 = 0;
    double m1 = 0, m2 = 0;      // alpha_k / pi
    double ratio = 0;           // m1 / m2^2
};

HarmonicMeasures harmonic_measures(double t, const FlowConfig& cfg);

struct RatioRow {
    double t = 0;
    double ratio = 0;
    double deviation = 0;  // |ratio/(6 pi) - 1|
    bool ok = false;
    std::string error;
};

struct RatioScan {
    std::vector<RatioRow> rows;
    double slope = 0;        // free log-log fit of deviation vs t
    double c_cuberoot = 0;   // fit of deviation = C t^{1/3}
    int n_ok = 0;
};

RatioScan ratio_scan(const std::vector<double>& t_grid, const FlowConfig& cfg);

// The seven ordered values of the monotonic disposition at time t for
// branch times 0 < t1 < t0 < t:
//   f2(0,t) < f2(z1,t) < f2(z0,t) < cbrt(t) < f1(z0,t) < f1(z1,t) < f1(0,t).
struct MonotonicityReport {
    double t1 = 0, t0 = 0, t = 0;
    std::array<double, 7> values{};
    std::array<std::string, 7> labels{};
    std::array<double, 6> margins{};
    double tolerance = 0;      // solver-tolerance scale used to judge ties
    bool ok = false;
    int failing_pair = -1;     // index into margins when not ok
    bool numerical_tie = false;  // failing margin within tolerance rather than a true violation
};

MonotonicityReport monotonicity_report(double t1, double t0, double t, const FlowConfig& cfg);

enum class RadiusMethod { root_test, ratio_test, cauchy_majorant };

struct RadiusEstimate {
    double eps = 0;
    RadiusMethod method = RadiusMethod::root_test;
    double value = 0;       // radius in the tau variable
    double value_t = 0;     // radius in t = tau^3
    double error = 0;
    int n_used = 0;
    // cauchy_majorant extras
    double c_opt = 0;       // maximizing r1/eps
    double majorant_m = 0;  // bound M at the optimum
};

// Root-test estimate of the convergence radius of the eps-series, from the
// tail of |a_n(eps)|^{1/n} with extrapolation of the 1/n corrections.
RadiusEstimate radius_root_test(const Rational& eps, int n_max);

// Cauchy-majorant lower bound R2(eps) = max_{r1 in (0, eps)} R1 with
// R1 = r1 (1 - exp(-(eps - r1)^2 / (48 r1^3))), by grid bracketing plus
// golden-section refinement.
RadiusEstimate majorant_lower_bound(double eps);

struct SmoothnessSegment {
    double t = 0;            // interior grid point where the turn is measured
    double turning_angle = 0;
};

struct SmoothnessReport {
    std::vector<SmoothnessSegment> segments;
    double max_turning_angle = 0;
    int n_failed_points = 0;
};

SmoothnessReport trace_smoothness(const std::vector<double>& t_grid, const DrivingSpec& driving,
                                  const FlowConfig& cfg);

const char* radius_method_name(RadiusMethod m);

}  // namespace loewner

#endif
