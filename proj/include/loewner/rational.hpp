#ifndef LOEWNER_RATIONAL_HPP
#define LOEWNER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace loewner {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// x^e for integer e (negative allowed, x != 0 then).
inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational r = 1;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// ln|x| without overflow; huge integers are handled via their bit length.
inline double log_abs(const Int& x) {
    if (x == 0) throw std::domain_error("log_abs(0)");
    Int a = abs(x);
    const unsigned bits = static_cast<unsigned>(msb(a)) + 1;
    if (bits <= 960) return std::log(a.convert_to<double>());
    const unsigned shift = bits - 64;
    Int top = a >> shift;
    return std::log(top.convert_to<double>()) + shift * 0.69314718055994530942;
}

inline double log_abs(const Rational& x) {
    if (x == 0) throw std::domain_error("log_abs(0)");
    return log_abs(numerator(x)) - log_abs(denominator(x));
}

// Safe conversion: values beyond double range become +-inf rather than UB.
inline double to_double(const Rational& x) {
    if (x == 0) return 0.0;
    const double lg = log_abs(x) * 1.4426950408889634074;  // log2
    if (lg > 1020.0) return x > 0 ? HUGE_VAL : -HUGE_VAL;
    if (lg < -1060.0) return 0.0;
    return x.convert_to<double>();
}

inline std::string to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

// Parses "p", "p/q" or a plain decimal like "0.125" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace loewner

#endif
