#ifndef LOEWNER_BOREL_HPP
#define LOEWNER_BOREL_HPP

#include <stdexcept>
#include <vector>

#include "loewner/series.hpp"

namespace loewner {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Factorially damped transform sum a_n/n! tau^n of the plus family, with an
// empirical convergence-radius estimate from the coefficient tail.
struct BorelTransform {
    std::vector<Rational> coeffs;  // coeffs[i] = a_{i+1}/(i+1)!
    double radius_estimate = 0;
    double radius_error = 0;

    int n_max() const { return static_cast<int>(coeffs.size()); }
    const Rational& coeff(int n) const { return coeffs.at(static_cast<size_t>(n - 1)); }
};

BorelTransform borel_transform(const ExactSeries& plus_series);

struct PadeDegenerateError : SolverError {
    using SolverError::SolverError;
};

// Rational approximant P_m/Q_k matching the transform through order m+k,
// built by an exact rational solve of the denominator system.
struct RationalApproximant {
    int m = 0, k = 0;
    std::vector<Rational> num;               // num[i] multiplies tau^i, degree m
    std::vector<Rational> den;               // den[0] = 1, degree k
    std::vector<double> num_d, den_d;        // double images for evaluation
    std::vector<double> positive_real_poles; // real poles with tau > 0, ascending

    double eval(double tau) const;
};

RationalApproximant pade_continuation(const BorelTransform& transform, int m, int k);

struct PoleOnRayError : SolverError {
    double pole;
    PoleOnRayError(const std::string& msg, double p) : SolverError(msg), pole(p) {}
};
struct QuadratureError : SolverError {
    double achieved;
    QuadratureError(const std::string& msg, double a) : SolverError(msg), achieved(a) {}
};

struct QuadratureConfig {
    double abs_tol = 1e-10;       // subdivision target for the Laplace integral
    double cutoff_factor = 1e-16; // truncate where exp(-x) falls below this times the peak
    int max_intervals = 4000;
    int primary_order = 8;        // (m,k) of the continuation actually summed
    // ladder orders used for the continuation error estimate
    std::vector<std::pair<int, int>> ladder{{6, 6}, {8, 8}, {10, 10}};
};

struct BorelResult {
    double value = 0;
    double quad_error = 0;          // adaptive quadrature estimate
    double continuation_error = 0;  // spread across the approximant ladder
    double error_estimate = 0;      // combined
    double x_max = 0;               // truncation point of the Laplace integral
    int intervals = 0;
};

// h(tau) = int_0^inf exp(-x) G(tau x) dx with G continued rationally.
BorelResult borel_sum(double tau, const BorelTransform& transform,
                      const QuadratureConfig& quad = {});

// Root-test radius with tail extrapolation shared by borel and analysis:
// least-squares fit of ln|a_n| = n ln(1/R) + alpha ln n + c over [n_lo, n_hi].
// Returns {R, error bar from split-window refits}.
std::pair<double, double> tail_radius_fit(const std::vector<Rational>& coeffs, int n_lo, int n_hi);

}  // namespace loewner

#endif
