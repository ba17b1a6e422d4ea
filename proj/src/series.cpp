#include "loewner/series.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {

namespace {

// Decimal-only integer parse; Int's own string constructor treats a leading
// zero as octal, which is wrong for "0.125"-style input.
Int parse_int_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty number");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("parse_rational: bare sign");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int_decimal(text.substr(0, slash));
        Int den = parse_int_decimal(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int_decimal(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac_len = text.size() - dot - 1;
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_int_decimal(digits), den);
}

std::string CubicRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    const char* pow_txt[3] = {"", "*w", "*w^2"};
    for (int i = 0; i < 3; ++i) {
        const Rational& q = q_[static_cast<size_t>(i)];
        if (q == 0) continue;
        if (!out.empty()) out += q > 0 ? " + " : " - ";
        else if (q < 0) out += "-";
        out += to_string(abs(q));
        out += pow_txt[i];
    }
    return out;
}

void ExactSeries::validate() const {
    const bool has_anchor = anchor.has_value();
    if ((step == BasisStep::half) != has_anchor)
        throw std::invalid_argument("ExactSeries: anchor present iff basis step is 1/2");
    if (has_anchor && *anchor <= 0)
        throw std::invalid_argument("ExactSeries: anchor must be positive");
}

double eval_series(const ExactSeries& s, double x, int n_trunc) {
    if (n_trunc < 1 || n_trunc > s.n_max())
        throw std::invalid_argument("eval_series: n_trunc out of range");
    if (x < 0 && s.step != BasisStep::integer)
        throw std::invalid_argument("eval_series: negative x with fractional basis step");
    double base;
    switch (s.step) {
        case BasisStep::integer: base = x; break;
        case BasisStep::half: base = std::sqrt(x); break;
        case BasisStep::third: base = std::cbrt(x); break;
        default: throw std::logic_error("eval_series: bad step");
    }
    // Horner in the step variable.
    double acc = 0.0;
    for (int n = n_trunc; n >= 1; --n) acc = acc * base + s.coeff(n).to_double();
    return s.offset.to_double() + acc * base;
}

std::vector<SeriesRow> series_rows(const ExactSeries& s) {
    std::vector<SeriesRow> rows;
    const Rational step = basis_step_value(s.step);
    for (int n = 1; n <= s.n_max(); ++n) {
        const CubicRational& c = s.coeff(n);
        bool emitted = false;
        for (int j = 0; j < 3; ++j) {
            const Rational& q = c.part(j);
            if (q == 0) continue;
            SeriesRow r;
            r.n = n;
            r.value_num = q;
            r.x_exponent = step * n;
            r.t0_exponent = Rational(j, 3);
            r.num_str = numerator(q).str();
            r.den_str = denominator(q).str();
            rows.push_back(std::move(r));
            emitted = true;
        }
        if (!emitted) {
            SeriesRow r;
            r.n = n;
            r.value_num = 0;
            r.x_exponent = step * n;
            r.t0_exponent = 0;
            r.num_str = "0";
            r.den_str = "1";
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace loewner
