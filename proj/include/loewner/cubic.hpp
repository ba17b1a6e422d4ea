#ifndef LOEWNER_CUBIC_HPP
#define LOEWNER_CUBIC_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "loewner/rational.hpp"

namespace loewner {

// Element of Q(w) with w = t0^{1/3}, t0 a positive rational: q0 + q1*w + q2*w^2.
// Products reduce w^3 -> t0 exactly, so arithmetic stays in the extension.
// Branch-point coefficients mix powers of t0^{1/3} from order two on, which is
// why a single rational-times-power representation is not enough.
class CubicRational {
public:
    CubicRational() : t0_(1) {}
    explicit CubicRational(Rational q0, Rational t0 = Rational(1))
        : t0_(std::move(t0)), q_{std::move(q0), 0, 0} { check_t0(); }
    CubicRational(Rational q0, Rational q1, Rational q2, Rational t0)
        : t0_(std::move(t0)), q_{std::move(q0), std::move(q1), std::move(q2)} { check_t0(); }

    const Rational& t0() const { return t0_; }
    const Rational& part(int i) const { return q_[static_cast<size_t>(i)]; }

    bool is_zero() const { return q_[0] == 0 && q_[1] == 0 && q_[2] == 0; }
    bool is_rational() const { return q_[1] == 0 && q_[2] == 0; }

    CubicRational& operator+=(const CubicRational& o) {
        require_same_field(o);
        for (int i = 0; i < 3; ++i) q_[static_cast<size_t>(i)] += o.q_[static_cast<size_t>(i)];
        return *this;
    }
    CubicRational& operator-=(const CubicRational& o) {
        require_same_field(o);
        for (int i = 0; i < 3; ++i) q_[static_cast<size_t>(i)] -= o.q_[static_cast<size_t>(i)];
        return *this;
    }
    CubicRational& operator*=(const CubicRational& o) {
        require_same_field(o);
        std::array<Rational, 5> c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                c[static_cast<size_t>(i + j)] += q_[static_cast<size_t>(i)] * o.q_[static_cast<size_t>(j)];
        q_[0] = c[0] + t0_ * c[3];
        q_[1] = c[1] + t0_ * c[4];
        q_[2] = c[2];
        return *this;
    }
    CubicRational& operator*=(const Rational& s) {
        for (auto& q : q_) q *= s;
        return *this;
    }

    friend CubicRational operator+(CubicRational a, const CubicRational& b) { return a += b; }
    friend CubicRational operator-(CubicRational a, const CubicRational& b) { return a -= b; }
    friend CubicRational operator*(CubicRational a, const CubicRational& b) { return a *= b; }
    friend CubicRational operator*(CubicRational a, const Rational& s) { return a *= s; }
    friend CubicRational operator*(const Rational& s, CubicRational a) { return a *= s; }
    friend bool operator==(const CubicRational& a, const CubicRational& b) {
        return a.t0_ == b.t0_ && a.q_ == b.q_;
    }

    double to_double() const {
        const double w = std::cbrt(loewner::to_double(t0_));
        return loewner::to_double(q_[0]) + loewner::to_double(q_[1]) * w +
               loewner::to_double(q_[2]) * w * w;
    }

    // "q0 + q1*w + q2*w^2" with zero parts dropped; plain "q0" when rational.
    std::string str() const;

private:
    void check_t0() const {
        if (t0_ <= 0) throw std::invalid_argument("CubicRational: t0 must be positive");
    }
    void require_same_field(const CubicRational& o) const {
        if (t0_ != o.t0_)
            throw std::invalid_argument("CubicRational: mixing different extension fields");
    }

    Rational t0_;
    std::array<Rational, 3> q_;
};

}  // namespace loewner

#endif
