#include "loewner/borel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace loewner {

namespace {

// 3-parameter linear least squares ln|a_n| = n*x0 + ln(n)*x1 + x2 via normal
// equations; the systems are tiny and well scaled after centering.
std::array<double, 3> fit_log_growth(const std::vector<std::pair<int, double>>& pts) {
    double S[3][3] = {{0}}, b[3] = {0};
    for (auto [n, L] : pts) {
        const double phi[3] = {static_cast<double>(n), std::log(static_cast<double>(n)), 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) S[i][j] += phi[i] * phi[j];
            b[i] += phi[i] * L;
        }
    }
    // gaussian elimination with partial pivoting
    double M[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) M[i][j] = S[i][j];
        M[i][3] = b[i];
    }
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(M[r][c]) > std::abs(M[p][c])) p = r;
        std::swap(M[c], M[p]);
        for (int r = 0; r < 3; ++r) {
            if (r == c || M[r][c] == 0) continue;
            const double f = M[r][c] / M[c][c];
            for (int j = c; j < 4; ++j) M[r][j] -= f * M[c][j];
        }
    }
    return {M[0][3] / M[0][0], M[1][3] / M[1][1], M[2][3] / M[2][2]};
}

double radius_from_window(const std::vector<Rational>& coeffs, int n_lo, int n_hi) {
    std::vector<std::pair<int, double>> pts;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Rational& c = coeffs[static_cast<size_t>(n - 1)];
        if (c != 0) pts.emplace_back(n, log_abs(c));
    }
    if (pts.size() < 6)
        throw SolverError("tail_radius_fit: too few nonzero coefficients in the tail window");
    return std::exp(-fit_log_growth(pts)[0]);
}

// Durand-Kerner roots of a double-coefficient polynomial (ascending coeffs).
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[static_cast<size_t>(deg)] == 0.0) --deg;
    std::vector<std::complex<double>> z(static_cast<size_t>(deg));
    if (deg == 0) return z;
    // deterministic start: scaled roots of unity off the real axis
    double scale = 0.0;
    for (int i = 0; i < deg; ++i)
        scale = std::max(scale, std::pow(std::abs(coeffs[static_cast<size_t>(i)] /
                                                  coeffs[static_cast<size_t>(deg)]),
                                         1.0 / (deg - i)));
    scale = std::max(scale, 1e-30);
    for (int i = 0; i < deg; ++i)
        z[static_cast<size_t>(i)] = std::polar(scale, 0.37 + 2.0 * M_PI * i / deg);
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = deg; i >= 0; --i) v = v * x + coeffs[static_cast<size_t>(i)];
        return v;
    };
    for (int iter = 0; iter < 300; ++iter) {
        double move = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> d = coeffs[static_cast<size_t>(deg)];
            for (int j = 0; j < deg; ++j)
                if (j != i) d *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (d == std::complex<double>(0)) continue;
            const auto delta = eval(z[static_cast<size_t>(i)]) / d;
            z[static_cast<size_t>(i)] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14 * scale) break;
    }
    return z;
}

// Gauss-Kronrod 15(7) nodes/weights on [-1,1] (symmetric half listed).
constexpr double kKronrodX[8] = {
    0.0, 0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993944, 0.8648644233597691, 0.9491079123427585, 0.9914553711208126};
constexpr double kKronrodW[8] = {
    0.2094821410847278, 0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299786, 0.0229353220105292};
constexpr double kGaussW[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    const double h = (b - a) / 2, c = (a + b) / 2;
    double kron = 0, gauss = 0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * kKronrodX[i];
        const double fv = i == 0 ? f(c) : f(c - x) + f(c + x);
        kron += kKronrodW[i] * fv;
        if (i % 2 == 0) gauss += kGaussW[i / 2] * fv;
    }
    return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

std::pair<double, double> tail_radius_fit(const std::vector<Rational>& coeffs, int n_lo, int n_hi) {
    if (n_hi - n_lo < 12) throw SolverError("tail_radius_fit: window too short");
    const double R = radius_from_window(coeffs, n_lo, n_hi);
    const int mid = (n_lo + n_hi) / 2;
    const double Ra = radius_from_window(coeffs, n_lo, mid);
    const double Rb = radius_from_window(coeffs, mid, n_hi);
    const double bar = std::abs(Ra - Rb) + std::abs(R - Rb);
    return {R, bar};
}

BorelTransform borel_transform(const ExactSeries& plus_series) {
    if (plus_series.step != BasisStep::integer)
        throw std::invalid_argument("borel_transform: expects an integer-step tau series");
    const int N = plus_series.n_max();
    BorelTransform out;
    out.coeffs.reserve(static_cast<size_t>(N));
    Int fact = 1;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        if (!plus_series.coeff(n).is_rational())
            throw std::invalid_argument("borel_transform: coefficients must be plain rationals");
        out.coeffs.push_back(plus_series.coeff(n).part(0) / Rational(fact));
    }
    if (N >= 40) {
        auto [R, bar] = tail_radius_fit(out.coeffs, N / 2, N);
        out.radius_estimate = R;
        out.radius_error = bar;
    } else {
        // crude root test on the last coefficient; enough for tiny transforms
        out.radius_estimate = std::exp(-log_abs(out.coeffs.back()) / N);
        out.radius_error = out.radius_estimate;
    }
    return out;
}

double RationalApproximant::eval(double tau) const {
    double nu = 0, de = 0;
    for (auto it = num_d.rbegin(); it != num_d.rend(); ++it) nu = nu * tau + *it;
    for (auto it = den_d.rbegin(); it != den_d.rend(); ++it) de = de * tau + *it;
    return nu / de;
}

RationalApproximant pade_continuation(const BorelTransform& transform, int m, int k) {
    if (k < 0 || m < 0 || m + k > transform.n_max())
        throw std::invalid_argument("pade_continuation: need m + k <= transform order");
    std::vector<Rational> c(static_cast<size_t>(m + k) + 1);
    for (int n = 1; n <= m + k; ++n) c[static_cast<size_t>(n)] = transform.coeff(n);

    RationalApproximant out;
    out.m = m;
    out.k = k;
    out.den.assign(static_cast<size_t>(k) + 1, Rational(0));
    out.den[0] = 1;
    if (k > 0) {
        // solve sum_{j=1}^{k} q_j c_{m+i-j} = -c_{m+i}, i = 1..k, exactly
        std::vector<std::vector<Rational>> M(static_cast<size_t>(k),
                                             std::vector<Rational>(static_cast<size_t>(k) + 1));
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                const int idx = m + i - j;
                M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                    idx >= 0 ? c[static_cast<size_t>(idx)] : Rational(0);
            }
            M[static_cast<size_t>(i - 1)][static_cast<size_t>(k)] = -c[static_cast<size_t>(m + i)];
        }
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
            if (piv < 0)
                throw PadeDegenerateError("pade_continuation: singular system at order (" +
                                          std::to_string(m) + "," + std::to_string(k) +
                                          "), try different degrees");
            std::swap(M[static_cast<size_t>(col)], M[static_cast<size_t>(piv)]);
            for (int r = 0; r < k; ++r) {
                if (r == col || M[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
                const Rational f = M[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                                   M[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int j = col; j <= k; ++j)
                    M[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                        f * M[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
        for (int j = 1; j <= k; ++j)
            out.den[static_cast<size_t>(j)] = M[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] /
                                              M[static_cast<size_t>(j - 1)][static_cast<size_t>(j - 1)];
    }
    out.num.assign(static_cast<size_t>(m) + 1, Rational(0));
    for (int i = 0; i <= m; ++i) {
        Rational s = 0;
        for (int j = 0; j <= std::min(i, k); ++j)
            s += out.den[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
        out.num[static_cast<size_t>(i)] = s;
    }
    out.num_d.resize(out.num.size());
    out.den_d.resize(out.den.size());
    for (size_t i = 0; i < out.num.size(); ++i) out.num_d[i] = to_double(out.num[i]);
    for (size_t i = 0; i < out.den.size(); ++i) out.den_d[i] = to_double(out.den[i]);

    for (const auto& root : poly_roots(out.den_d))
        if (root.real() > 0 && std::abs(root.imag()) < 1e-10 * std::max(1.0, std::abs(root.real())))
            out.positive_real_poles.push_back(root.real());
    std::sort(out.positive_real_poles.begin(), out.positive_real_poles.end());
    return out;
}

BorelResult borel_sum(double tau, const BorelTransform& transform, const QuadratureConfig& quad) {
    if (tau < 0) throw std::invalid_argument("borel_sum: tau must be nonnegative");
    BorelResult res;
    if (tau == 0) return res;  // G(0) = 0

    const int order = quad.primary_order;
    RationalApproximant primary = pade_continuation(transform, order, order);

    // Truncation point: walk out until exp(-x)|G| drops below cutoff * peak.
    double peak = 0, x_max = 10;
    auto integrand = [&](double x) { return std::exp(-x) * primary.eval(tau * x); };
    for (;;) {
        for (double x = 0; x <= x_max; x += x_max / 256)
            peak = std::max(peak, std::abs(integrand(x)));
        const double tail = std::abs(integrand(x_max));
        if (tail <= quad.cutoff_factor * std::max(peak, 1e-300) || x_max > 1400) break;
        x_max *= 1.5;
    }
    res.x_max = x_max;

    for (double p : primary.positive_real_poles)
        if (p <= tau * x_max * 1.05)
            throw PoleOnRayError("borel_sum: continuation pole on the integration ray at tau*x = " +
                                     std::to_string(p),
                                 p);

    // Adaptive Gauss-Kronrod on [0, x_max], largest-error-first subdivision.
    struct Seg { double a, b, val, err; };
    std::vector<Seg> segs;
    auto make = [&](double a, double b) {
        auto [v, e] = gk15(integrand, a, b);
        return Seg{a, b, v, e};
    };
    const int init = 16;
    for (int i = 0; i < init; ++i)
        segs.push_back(make(x_max * i / init, x_max * (i + 1) / init));
    auto total_err = [&] {
        double e = 0;
        for (const auto& s : segs) e += s.err;
        return e;
    };
    while (total_err() > quad.abs_tol && static_cast<int>(segs.size()) < quad.max_intervals) {
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const Seg s = segs[worst];
        segs[worst] = make(s.a, (s.a + s.b) / 2);
        segs.push_back(make((s.a + s.b) / 2, s.b));
    }
    res.quad_error = total_err();
    if (res.quad_error > 100 * quad.abs_tol)
        throw QuadratureError("borel_sum: quadrature did not reach tolerance", res.quad_error);
    for (const auto& s : segs) res.value += s.val;
    res.intervals = static_cast<int>(segs.size());

    // Continuation error: spread of the ladder evaluations of the integral.
    double lo = res.value, hi = res.value;
    for (auto [lm, lk] : quad.ladder) {
        if (lm == order && lk == order) continue;
        if (lm + lk > transform.n_max()) continue;
        RationalApproximant alt = pade_continuation(transform, lm, lk);
        bool poisoned = false;
        for (double p : alt.positive_real_poles)
            if (p <= tau * x_max * 1.05) poisoned = true;
        if (poisoned) continue;  // ladder member unusable at this tau; skip
        auto alt_f = [&](double x) { return std::exp(-x) * alt.eval(tau * x); };
        double v = 0;
        for (const auto& s : segs) v += gk15(alt_f, s.a, s.b).first;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    res.continuation_error = hi - lo;
    res.error_estimate = res.quad_error + res.continuation_error;
    return res;
}

}  // namespace loewner
