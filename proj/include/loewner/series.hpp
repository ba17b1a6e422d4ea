#ifndef LOEWNER_SERIES_HPP
#define LOEWNER_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "loewner/cubic.hpp"
#include "loewner/rational.hpp"

namespace loewner {

// Exponent step of the power basis: x^n, x^{n/2} or x^{n/3}.
enum class BasisStep { integer, half, third };

inline Rational basis_step_value(BasisStep s) {
    switch (s) {
        case BasisStep::integer: return Rational(1);
        case BasisStep::half: return Rational(1, 2);
        case BasisStep::third: return Rational(1, 3);
    }
    throw std::logic_error("basis_step_value: bad enum");
}

// Formal series offset + sum_{n>=1} coeff_n x^{n*step} with exact coefficients
// in Q(t0^{1/3}).  The anchor t0 is present exactly for half-step series,
// which expand about a branch time t0 > 0.
struct ExactSeries {
    BasisStep step = BasisStep::integer;
    std::optional<Rational> anchor;          // expansion point t0 (half-step only)
    CubicRational offset;
    std::vector<CubicRational> coeffs;       // coeffs[i] is the index-(i+1) coefficient

    int n_max() const { return static_cast<int>(coeffs.size()); }
    const CubicRational& coeff(int n) const {  // n = 1..n_max
        if (n < 1 || n > n_max()) throw std::out_of_range("ExactSeries::coeff");
        return coeffs[static_cast<size_t>(n - 1)];
    }
    void validate() const;
};

// Floating-point evaluation of the truncated series at x (exact coefficients,
// floating point only here).  Rejects x < 0 for fractional basis steps.
double eval_series(const ExactSeries& s, double x, int n_trunc);

// One exported coefficient term: coefficient = num/den * t0^{t0_exponent},
// attached to basis power x^{x_exponent}.  A coefficient in Q(t0^{1/3}) emits
// up to three rows (t0 exponents 0, 1/3, 2/3).
struct SeriesRow {
    int n;
    Rational value_num;
    Rational x_exponent;
    Rational t0_exponent;
    std::string num_str;
    std::string den_str;
};

std::vector<SeriesRow> series_rows(const ExactSeries& s);

}  // namespace loewner

#endif
