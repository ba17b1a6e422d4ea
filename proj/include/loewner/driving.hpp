#ifndef LOEWNER_DRIVING_HPP
#define LOEWNER_DRIVING_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace loewner {

// The three driving functions the engine integrates against.  The shifted
// variant lambda(t1) = (t1 + t0)^{1/3} is analytic at t1 = 0 and backs the
// concatenation identity.
struct DrivingSpec {
    enum class Kind { cube_root, zero, shifted_cube_root };

    Kind kind = Kind::cube_root;
    double shift = 0.0;  // t0 of the shifted variant

    static DrivingSpec cube_root() { return {Kind::cube_root, 0.0}; }
    static DrivingSpec zero() { return {Kind::zero, 0.0}; }
    static DrivingSpec shifted(double t0) {
        if (t0 <= 0) throw std::invalid_argument("DrivingSpec::shifted: t0 must be positive");
        return {Kind::shifted_cube_root, t0};
    }

    template <class Real>
    Real lambda(Real t) const {
        switch (kind) {
            case Kind::zero: return Real(0);
            case Kind::cube_root: return t <= Real(0) ? Real(0) : std::cbrt(t);
            case Kind::shifted_cube_root: return std::cbrt(t + Real(shift));
        }
        return Real(0);
    }

    // dlambda/dt where defined (cube_root blows up at t = 0).
    template <class Real>
    Real dlambda(Real t) const {
        switch (kind) {
            case Kind::zero: return Real(0);
            case Kind::cube_root: {
                if (t <= Real(0)) throw std::domain_error("dlambda: cube_root not differentiable at 0");
                const Real c = std::cbrt(t);
                return Real(1) / (Real(3) * c * c);
            }
            case Kind::shifted_cube_root: {
                const Real c = std::cbrt(t + Real(shift));
                return Real(1) / (Real(3) * c * c);
            }
        }
        return Real(0);
    }

    // Only the plain cube root needs the tau = t^{1/3} form near t = 0.
    bool needs_tau_form() const { return kind == Kind::cube_root; }

    std::string name() const {
        switch (kind) {
            case Kind::zero: return "zero";
            case Kind::cube_root: return "cube_root";
            case Kind::shifted_cube_root: return "shifted_cube_root(" + std::to_string(shift) + ")";
        }
        return "?";
    }
};

}  // namespace loewner

#endif
