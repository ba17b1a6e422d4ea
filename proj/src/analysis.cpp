#include "loewner/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

HarmonicMeasures harmonic_measures(double t, const FlowConfig& cfg) {
    cfg.validate();
    if (t <= 0) throw std::invalid_argument("harmonic_measures: t must be positive");
    if (t > cfg.t_max)
        throw std::invalid_argument("harmonic_measures: t exceeds t_max (slit regime guard)");
    HarmonicMeasures h;
    h.t = t;
    h.f1 = solve_singular(BranchSign::plus, 0.0, t, cfg).back().f.real();
    h.f2 = solve_singular(BranchSign::minus, 0.0, t, cfg).back().f.real();
    const double lam = std::cbrt(t);
    h.alpha1 = std::atan(h.f1) - std::atan(lam);
    h.alpha2 = std::atan(lam) - std::atan(h.f2);
    h.m1 = h.alpha1 / kPi;
    h.m2 = h.alpha2 / kPi;
    h.ratio = h.m1 / (h.m2 * h.m2);
    return h;
}

RatioScan ratio_scan(const std::vector<double>& t_grid, const FlowConfig& cfg) {
    RatioScan scan;
    scan.rows.reserve(t_grid.size());
    for (double t : t_grid) {
        RatioRow row;
        row.t = t;
        try {
            const auto h = harmonic_measures(t, cfg);
            row.ratio = h.ratio;
            row.deviation = std::abs(h.ratio / (6.0 * kPi) - 1.0);
            row.ok = true;
            ++scan.n_ok;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        scan.rows.push_back(std::move(row));
    }
    // free log-log slope and the C of deviation = C t^{1/3}
    double sx = 0, sy = 0, sxx = 0, sxy = 0, sc = 0;
    int n = 0;
    for (const auto& r : scan.rows) {
        if (!r.ok || r.deviation <= 0) continue;
        const double x = std::log(r.t), y = std::log(r.deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        sc += r.deviation / std::cbrt(r.t);
        ++n;
    }
    if (n >= 2) {
        scan.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        scan.c_cuberoot = sc / n;
    }
    return scan;
}

MonotonicityReport monotonicity_report(double t1, double t0, double t, const FlowConfig& cfg) {
    cfg.validate();
    if (!(0 < t1 && t1 < t0 && t0 < t))
        throw std::invalid_argument("monotonicity_report: need 0 < t1 < t0 < t");
    if (t > cfg.t_max)
        throw std::invalid_argument("monotonicity_report: t exceeds t_max (slit regime guard)");

    MonotonicityReport rep;
    rep.t1 = t1;
    rep.t0 = t0;
    rep.t = t;
    rep.labels = {"f2(0,t)", "f2(z1,t)", "f2(z0,t)", "cbrt(t)", "f1(z0,t)", "f1(z1,t)", "f1(0,t)"};
    rep.values[0] = solve_singular(BranchSign::minus, 0.0, t, cfg).back().f.real();
    rep.values[1] = solve_branch(t1, BranchSign::minus, t, cfg).back().f.real();
    rep.values[2] = solve_branch(t0, BranchSign::minus, t, cfg).back().f.real();
    rep.values[3] = std::cbrt(t);
    rep.values[4] = solve_branch(t0, BranchSign::plus, t, cfg).back().f.real();
    rep.values[5] = solve_branch(t1, BranchSign::plus, t, cfg).back().f.real();
    rep.values[6] = solve_singular(BranchSign::plus, 0.0, t, cfg).back().f.real();

    double scale = 0;
    for (double v : rep.values) scale = std::max(scale, std::abs(v));
    rep.tolerance = cfg.rel_tol * scale + cfg.abs_tol;

    rep.ok = true;
    for (int i = 0; i < 6; ++i) {
        rep.margins[static_cast<size_t>(i)] =
            rep.values[static_cast<size_t>(i + 1)] - rep.values[static_cast<size_t>(i)];
        if (rep.margins[static_cast<size_t>(i)] <= 0 && rep.ok) {
            rep.ok = false;
            rep.failing_pair = i;
            rep.numerical_tie = std::abs(rep.margins[static_cast<size_t>(i)]) <= rep.tolerance;
        }
    }
    return rep;
}

const char* radius_method_name(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::root_test: return "root_test";
        case RadiusMethod::ratio_test: return "ratio_test";
        case RadiusMethod::cauchy_majorant: return "cauchy_majorant";
    }
    return "?";
}

RadiusEstimate radius_root_test(const Rational& eps, int n_max) {
    if (eps == 0)
        throw std::invalid_argument(
            "radius_root_test: eps = 0 is the singular point of indefinite character");
    if (n_max < 50) throw std::invalid_argument("radius_root_test: need n_max >= 50");
    const ExactSeries a = holomorphic_coeffs(eps, n_max);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) coeffs.push_back(a.coeff(n).part(0));
    auto [R, bar] = tail_radius_fit(coeffs, n_max / 2, n_max);

    RadiusEstimate est;
    est.eps = to_double(eps);
    est.method = RadiusMethod::root_test;
    est.value = R;
    est.value_t = R * R * R;
    est.error = bar;
    est.n_used = n_max;
    return est;
}

RadiusEstimate majorant_lower_bound(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("majorant_lower_bound: eps must be positive");
    auto R1 = [eps](double r1) -> double {
        if (r1 <= 0 || r1 >= eps) return 0.0;
        const double d = eps - r1;
        return r1 * (1.0 - std::exp(-d * d / (48.0 * r1 * r1 * r1)));
    };
    // coarse bracket
    const int n_grid = 4000;
    int best = 1;
    double best_v = -1;
    for (int i = 1; i < n_grid; ++i) {
        const double v = R1(eps * i / n_grid);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    if (best_v <= 0)
        throw SolverError("majorant_lower_bound: no interior maximum found in the r1 scan");
    double a = eps * (best - 1) / n_grid, b = eps * (best + 1) / n_grid;
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int i = 0; i < 200 && (b - a) > 1e-15 * eps; ++i) {
        if (R1(c) > R1(d)) {
            b = d;
            d = c;
            c = b - gr * (b - a);
        } else {
            a = c;
            c = d;
            d = a + gr * (b - a);
        }
    }
    const double r1 = 0.5 * (a + b);

    RadiusEstimate est;
    est.eps = eps;
    est.method = RadiusMethod::cauchy_majorant;
    est.value = R1(r1);
    est.value_t = est.value * est.value * est.value;
    est.error = std::abs(R1(a) - R1(b)) + 1e-14 * est.value;
    est.c_opt = r1 / eps;
    est.majorant_m = 12.0 * r1 * r1 / (eps - r1);  // M = 6 r1^2/delta at delta = (eps - r1)/2
    est.n_used = n_grid;
    return est;
}

SmoothnessReport trace_smoothness(const std::vector<double>& t_grid, const DrivingSpec& driving,
                                  const FlowConfig& cfg) {
    if (t_grid.size() < 2)
        throw std::invalid_argument("trace_smoothness: need at least two grid points");
    if (t_grid.front() <= 0)
        throw std::invalid_argument("trace_smoothness: grid must stay away from t = 0");
    const Trace tr = trace_curve(t_grid, driving, cfg, /*check_residual=*/false);
    SmoothnessReport rep;
    std::vector<const TracePoint*> good;
    for (const auto& p : tr.points) {
        if (p.ok)
            good.push_back(&p);
        else
            ++rep.n_failed_points;
    }
    for (size_t i = 1; i + 1 < good.size(); ++i) {
        const auto v1 = good[i]->gamma - good[i - 1]->gamma;
        const auto v2 = good[i + 1]->gamma - good[i]->gamma;
        const double ang = std::abs(std::arg(v2 / v1));
        rep.segments.push_back({good[i]->t, ang});
        rep.max_turning_angle = std::max(rep.max_turning_angle, ang);
    }
    return rep;
}

}  // namespace loewner
