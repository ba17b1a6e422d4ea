#ifndef LOEWNER_COEFFICIENTS_HPP
#define LOEWNER_COEFFICIENTS_HPP

#include <vector>

#include "loewner/series.hpp"

namespace loewner {

// Default guard on recurrence length; the convolutions are quadratic in n_max
// with factorially large integers.  Callers may raise it explicitly.
inline constexpr int kCoeffCap = 500;

enum class BranchSign { plus, minus };

// a_n^+ : a_1=1, a_2=6, a_n = -sum_{k=2}^{n-1} k a_k a_{n+1-k}.  Integers.
ExactSeries singular_plus_coeffs(int n_max, int cap = kCoeffCap);

// a_n^- : a_1=0, a_2=-3, a_n = (1/n) sum_{k=2}^{n-1} k a_k a_{n+1-k}.
ExactSeries singular_minus_coeffs(int n_max, int cap = kCoeffCap);

// Taylor coefficients of t^{1/3} about t0 > 0, emitted on the half-integer
// grid: index n=2k holds c_k = (-1)^{k-1} 2*5*...*(3k-4) / (3^k t0^{k-1/3} k!),
// odd n hold exact zeros.  Coefficients are rational multiples of t0^{1/3}.
ExactSeries cube_root_taylor(const Rational& t0, int k_max, int cap = kCoeffCap);

// Half-power branch coefficients b_{n/2} about t0 > 0:
//   b_{1/2} = 2,
//   b_{n/2} = (c_{n/2} - (1/2) sum_{k=2}^{n-1} k b_{k/2} (b_{(n+1-k)/2} - c_{(n+1-k)/2})) / (n+1).
// The minus branch flips the sign of odd-index coefficients (other branch of
// the square root).  Values live in Q(t0^{1/3}).
ExactSeries branch_half_coeffs(const Rational& t0, int n_max,
                               BranchSign sign = BranchSign::plus, int cap = kCoeffCap);

// Coefficients a_n(eps) of the holomorphic solution through eps != 0:
// a_1=a_2=0, a_k = 6/(k eps^{k-2}) for k=3..5, then
// a_n = ((n-1) a_{n-1} - sum_{k=3}^{n-3} (n-k) a_{n-k} a_k) / (n eps).
ExactSeries holomorphic_coeffs(const Rational& eps, int n_max, int cap = kCoeffCap);

struct BoundReport {
    int n;
    Rational lower;   // 6^{n-1} (n-1)!
    Rational value;   // |a_n^+|
    Rational upper;   // 12^{n-1} n^{n-3}
    bool ok;          // lower <= value <= upper
};

std::vector<BoundReport> lemma1_report(int n_max, int cap = kCoeffCap);

// ---- residual oracles ------------------------------------------------------
// Substitute a truncated family into its defining functional equation and
// return the residual coefficients by increasing exponent (index = power of
// the working variable).  These go through plain polynomial convolution only,
// independent of the recurrences above.

// tau-variable equation S'(tau) (S(tau) - tau) - 6 tau^2 for the singular
// families; residual index = power of tau.
std::vector<CubicRational> residual_singular(const ExactSeries& s);

// u = sqrt(t - t0) equation B'(u) (B(u) - C(u)) - 4u for the branch family;
// residual index = power of u.
std::vector<CubicRational> residual_branch(const ExactSeries& b);

// tau-variable equation A'(tau) (eps - tau + A(tau)) - 6 tau^2 for the
// holomorphic family; residual index = power of tau.
std::vector<CubicRational> residual_holomorphic(const ExactSeries& a, const Rational& eps);

// First index with a nonzero entry, or -1 when all vanish.
int first_nonzero_index(const std::vector<CubicRational>& poly);

}  // namespace loewner

#endif
