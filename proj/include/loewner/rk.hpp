#ifndef LOEWNER_RK_HPP
#define LOEWNER_RK_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace loewner {

// Outcome of one adaptive run.
enum class StepOutcome { done, stopped_by_monitor, step_underflow };

struct RkStats {
    long accepted = 0;
    long rejected = 0;
    double min_step = 0;
};

namespace detail {
template <class Real>
inline Real state_abs(Real x) { return std::abs(x); }
template <class Real>
inline Real state_abs(std::complex<Real> x) { return std::abs(x); }
}  // namespace detail

// Dormand-Prince 5(4) embedded pair with FSAL, templated on the scalar and
// the state (real or complex).  The monitor callback sees every accepted
// state and may stop the run; sample times are hit exactly by step capping.
template <class Real, class State>
class Dopri5 {
public:
    using Rhs = std::function<State(Real, const State&)>;
    // monitor(t, y) -> false to stop integration after this accepted step
    using Monitor = std::function<bool(Real, const State&)>;

    Dopri5(Rhs rhs, Real rel_tol, Real abs_tol) : rhs_(std::move(rhs)), rtol_(rel_tol), atol_(abs_tol) {}

    StepOutcome integrate(Real t0, Real t1, State& y, RkStats& stats, const Monitor& monitor = {}) {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        if (t1 == t0) return StepOutcome::done;
        const Real dir = t1 > t0 ? Real(1) : Real(-1);
        Real t = t0;
        State k1 = rhs_(t, y);
        Real h = initial_step(t, y, k1, dir, std::abs(t1 - t0));
        stats.min_step = static_cast<double>(std::abs(h));
        int consecutive_rejects = 0;

        while (dir * (t1 - t) > Real(0)) {
            h = dir * std::min(std::abs(h), std::abs(t1 - t));
            if (std::abs(h) < min_step_floor(t)) return StepOutcome::step_underflow;

            const State k2 = rhs_(t + c2 * h, y + h * Real(a21) * k1);
            const State k3 = rhs_(t + c3 * h, y + h * (Real(a31) * k1 + Real(a32) * k2));
            const State k4 = rhs_(t + c4 * h, y + h * (Real(a41) * k1 + Real(a42) * k2 + Real(a43) * k3));
            const State k5 = rhs_(t + c5 * h,
                                  y + h * (Real(a51) * k1 + Real(a52) * k2 + Real(a53) * k3 + Real(a54) * k4));
            const State k6 = rhs_(t + h, y + h * (Real(a61) * k1 + Real(a62) * k2 + Real(a63) * k3 +
                                                  Real(a64) * k4 + Real(a65) * k5));
            const State y5 = y + h * (Real(b1) * k1 + Real(b3) * k3 + Real(b4) * k4 + Real(b5) * k5 +
                                      Real(b6) * k6);
            const State k7 = rhs_(t + h, y5);
            const State err_v = h * (Real(e1) * k1 + Real(e3) * k3 + Real(e4) * k4 + Real(e5) * k5 +
                                     Real(e6) * k6 + Real(e7) * k7);
            const Real scale = atol_ + rtol_ * std::max(detail::state_abs(y), detail::state_abs(y5));
            const Real err = detail::state_abs(err_v) / scale;

            if (err <= Real(1)) {
                t += h;
                y = y5;
                k1 = k7;  // FSAL
                ++stats.accepted;
                stats.min_step = std::min(stats.min_step, static_cast<double>(std::abs(h)));
                consecutive_rejects = 0;
                if (monitor && !monitor(t, y)) return StepOutcome::stopped_by_monitor;
            } else {
                ++stats.rejected;
                if (++consecutive_rejects > 200) return StepOutcome::step_underflow;
            }
            const Real raw = err > Real(0)
                                 ? Real(0.9) * std::pow(static_cast<double>(err), -0.2)
                                 : Real(5);
            h *= std::clamp(raw, Real(0.2), Real(5));
        }
        return StepOutcome::done;
    }

private:
    Real initial_step(Real t, const State& y, const State& f, Real dir, Real span) const {
        const Real d0 = detail::state_abs(y), d1 = detail::state_abs(f);
        Real h = (d1 > Real(1e-12)) ? Real(0.01) * (atol_ + rtol_ * d0 + rtol_) / d1 : span / Real(100);
        h = std::min(h, span / Real(10));
        return dir * std::max(h, min_step_floor(t) * Real(4));
    }
    Real min_step_floor(Real t) const {
        const Real ulp = std::numeric_limits<Real>::epsilon();
        return ulp * std::max(std::abs(t), Real(1e-30)) * Real(4);
    }

    Rhs rhs_;
    Real rtol_, atol_;
};

}  // namespace loewner

#endif
