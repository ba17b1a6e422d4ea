#include "loewner/coefficients.hpp"

#include <stdexcept>
#include <string>

namespace loewner {

namespace {

void check_n_max(int n_max, int cap, const char* who) {
    if (n_max < 1) throw std::invalid_argument(std::string(who) + ": n_max must be >= 1");
    if (n_max > cap)
        throw std::invalid_argument(std::string(who) + ": n_max " + std::to_string(n_max) +
                                    " exceeds cap " + std::to_string(cap));
}

// c_k as rational multiple of w = t0^{1/3}: c_k = q_k * w with
// q_k = (-1)^{k-1} 2*5*...*(3k-4) / (3^k k! t0^k).
std::vector<Rational> cube_root_q(const Rational& t0, int k_max) {
    std::vector<Rational> q(static_cast<size_t>(k_max) + 1);
    Rational prod = 1;  // empty product for k = 1
    Rational pow3 = 1, fact = 1, powt = 1;
    for (int k = 1; k <= k_max; ++k) {
        if (k >= 2) prod *= (3 * k - 4);
        pow3 *= 3;
        fact *= k;
        powt *= t0;
        Rational v = prod / (pow3 * fact * powt);
        if (k % 2 == 0) v = -v;
        q[static_cast<size_t>(k)] = v;
    }
    return q;
}

std::vector<CubicRational> convolve(const std::vector<CubicRational>& p,
                                    const std::vector<CubicRational>& q,
                                    const Rational& t0) {
    std::vector<CubicRational> r(p.size() + q.size() - 1, CubicRational(Rational(0), t0));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (size_t j = 0; j < q.size(); ++j) {
            if (q[j].is_zero()) continue;
            r[i + j] += p[i] * q[j];
        }
    }
    return r;
}

}  // namespace

ExactSeries singular_plus_coeffs(int n_max, int cap) {
    check_n_max(n_max, cap, "singular_plus_coeffs");
    std::vector<Rational> a(static_cast<size_t>(n_max) + 1);
    a[1] = 1;
    if (n_max >= 2) a[2] = 6;
    for (int n = 3; n <= n_max; ++n) {
        Rational s = 0;
        for (int k = 2; k <= n - 1; ++k) s += k * a[static_cast<size_t>(k)] * a[static_cast<size_t>(n + 1 - k)];
        a[static_cast<size_t>(n)] = -s;
    }
    ExactSeries out;
    out.step = BasisStep::integer;
    out.coeffs.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.coeffs.emplace_back(a[static_cast<size_t>(n)]);
    return out;
}

ExactSeries singular_minus_coeffs(int n_max, int cap) {
    check_n_max(n_max, cap, "singular_minus_coeffs");
    std::vector<Rational> a(static_cast<size_t>(n_max) + 1);
    a[1] = 0;
    if (n_max >= 2) a[2] = -3;
    for (int n = 3; n <= n_max; ++n) {
        Rational s = 0;
        for (int k = 2; k <= n - 1; ++k) s += k * a[static_cast<size_t>(k)] * a[static_cast<size_t>(n + 1 - k)];
        a[static_cast<size_t>(n)] = s / n;
    }
    ExactSeries out;
    out.step = BasisStep::integer;
    out.coeffs.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.coeffs.emplace_back(a[static_cast<size_t>(n)]);
    return out;
}

ExactSeries cube_root_taylor(const Rational& t0, int k_max, int cap) {
    if (t0 <= 0)
        throw std::invalid_argument("cube_root_taylor: expansion point t0 must be positive");
    check_n_max(k_max, cap, "cube_root_taylor");
    const auto q = cube_root_q(t0, k_max);
    ExactSeries out;
    out.step = BasisStep::half;
    out.anchor = t0;
    out.offset = CubicRational(Rational(0), Rational(1), Rational(0), t0);  // t0^{1/3}
    out.coeffs.assign(static_cast<size_t>(2 * k_max), CubicRational(Rational(0), t0));
    for (int k = 1; k <= k_max; ++k)
        out.coeffs[static_cast<size_t>(2 * k - 1)] =
            CubicRational(Rational(0), q[static_cast<size_t>(k)], Rational(0), t0);
    return out;
}

ExactSeries branch_half_coeffs(const Rational& t0, int n_max, BranchSign sign, int cap) {
    if (t0 <= 0)
        throw std::invalid_argument("branch_half_coeffs: expansion point t0 must be positive");
    check_n_max(n_max, cap, "branch_half_coeffs");
    const auto q = cube_root_q(t0, n_max / 2 + 1);
    const CubicRational zero(Rational(0), t0);
    auto c_half = [&](int n) -> CubicRational {  // c_{n/2}
        if (n % 2 == 1) return zero;
        return CubicRational(Rational(0), q[static_cast<size_t>(n / 2)], Rational(0), t0);
    };
    std::vector<CubicRational> b(static_cast<size_t>(n_max) + 1, zero);
    b[1] = CubicRational(Rational(2), t0);
    for (int n = 2; n <= n_max; ++n) {
        CubicRational s = zero;
        for (int k = 2; k <= n - 1; ++k)
            s += (b[static_cast<size_t>(k)] * (b[static_cast<size_t>(n + 1 - k)] - c_half(n + 1 - k))) *
                 Rational(k);
        b[static_cast<size_t>(n)] = (c_half(n) - s * Rational(1, 2)) * Rational(1, n + 1);
    }
    ExactSeries out;
    out.step = BasisStep::half;
    out.anchor = t0;
    out.offset = CubicRational(Rational(0), Rational(1), Rational(0), t0);  // t0^{1/3}
    out.coeffs.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        CubicRational v = b[static_cast<size_t>(n)];
        if (sign == BranchSign::minus && (n % 2 == 1)) v *= Rational(-1);
        out.coeffs.push_back(std::move(v));
    }
    return out;
}

ExactSeries holomorphic_coeffs(const Rational& eps, int n_max, int cap) {
    if (eps == 0)
        throw std::invalid_argument(
            "holomorphic_coeffs: eps = 0 is the singular point of indefinite character");
    check_n_max(n_max, cap, "holomorphic_coeffs");
    std::vector<Rational> a(static_cast<size_t>(n_max) + 1);
    for (int k = 3; k <= n_max && k <= 5; ++k)
        a[static_cast<size_t>(k)] = Rational(6) / (k * pow_rational(eps, k - 2));
    for (int n = 6; n <= n_max; ++n) {
        Rational s = 0;
        for (int k = 3; k <= n - 3; ++k)
            s += (n - k) * a[static_cast<size_t>(n - k)] * a[static_cast<size_t>(k)];
        a[static_cast<size_t>(n)] = ((n - 1) * a[static_cast<size_t>(n - 1)] - s) / (n * eps);
    }
    ExactSeries out;
    out.step = BasisStep::third;
    out.offset = CubicRational(eps);
    out.coeffs.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) out.coeffs.emplace_back(a[static_cast<size_t>(n)]);
    return out;
}

std::vector<BoundReport> lemma1_report(int n_max, int cap) {
    if (n_max < 2) throw std::invalid_argument("lemma1_report: n_max must be >= 2");
    check_n_max(n_max, cap, "lemma1_report");
    const ExactSeries plus = singular_plus_coeffs(n_max, cap);
    std::vector<BoundReport> out;
    out.reserve(static_cast<size_t>(n_max) - 1);
    Rational pow6 = 6, pow12 = 12;  // 6^{n-1}, 12^{n-1} at n = 2
    Int fact = 1;                   // (n-1)!
    for (int n = 2; n <= n_max; ++n) {
        BoundReport r;
        r.n = n;
        r.lower = pow6 * fact;
        r.value = abs(plus.coeff(n).part(0));
        r.upper = pow12 * pow_rational(Rational(n), n - 3);
        r.ok = r.lower <= r.value && r.value <= r.upper;
        out.push_back(std::move(r));
        pow6 *= 6;
        pow12 *= 12;
        fact *= n;
    }
    return out;
}

std::vector<CubicRational> residual_singular(const ExactSeries& s) {
    if (s.step != BasisStep::integer)
        throw std::invalid_argument("residual_singular: expects an integer-step tau series");
    const int N = s.n_max();
    const Rational t0 = 1;
    const CubicRational zero(Rational(0), t0);
    std::vector<CubicRational> S(static_cast<size_t>(N) + 1, zero), dS(static_cast<size_t>(N), zero);
    for (int n = 1; n <= N; ++n) {
        S[static_cast<size_t>(n)] = s.coeff(n);
        dS[static_cast<size_t>(n - 1)] = s.coeff(n) * Rational(n);
    }
    S[1] -= CubicRational(Rational(1), t0);  // S - tau
    auto R = convolve(dS, S, t0);
    R[2] -= CubicRational(Rational(6), t0);
    return R;
}

std::vector<CubicRational> residual_branch(const ExactSeries& b) {
    if (b.step != BasisStep::half || !b.anchor)
        throw std::invalid_argument("residual_branch: expects a half-step anchored series");
    const Rational t0 = *b.anchor;
    const int N = b.n_max();
    const auto q = cube_root_q(t0, N / 2 + 1);
    const CubicRational zero(Rational(0), t0);
    std::vector<CubicRational> Bp(static_cast<size_t>(N), zero), BmC(static_cast<size_t>(N) + 1, zero);
    for (int n = 1; n <= N; ++n) {
        Bp[static_cast<size_t>(n - 1)] = b.coeff(n) * Rational(n);
        CubicRational v = b.coeff(n);
        if (n % 2 == 0)
            v -= CubicRational(Rational(0), q[static_cast<size_t>(n / 2)], Rational(0), t0);
        BmC[static_cast<size_t>(n)] = v;
    }
    auto R = convolve(Bp, BmC, t0);
    R[1] -= CubicRational(Rational(4), t0);
    return R;
}

std::vector<CubicRational> residual_holomorphic(const ExactSeries& a, const Rational& eps) {
    if (a.step != BasisStep::third)
        throw std::invalid_argument("residual_holomorphic: expects a third-step series");
    const int N = a.n_max();
    const Rational t0 = 1;
    const CubicRational zero(Rational(0), t0);
    std::vector<CubicRational> Ap(static_cast<size_t>(N), zero), base(static_cast<size_t>(N) + 1, zero);
    base[0] = CubicRational(eps, t0);
    base[1] = CubicRational(Rational(-1), t0);
    for (int n = 1; n <= N; ++n) {
        Ap[static_cast<size_t>(n - 1)] = a.coeff(n) * Rational(n);
        base[static_cast<size_t>(n)] += a.coeff(n);
    }
    auto R = convolve(Ap, base, t0);
    R[2] -= CubicRational(Rational(6), t0);
    return R;
}

int first_nonzero_index(const std::vector<CubicRational>& poly) {
    for (size_t i = 0; i < poly.size(); ++i)
        if (!poly[i].is_zero()) return static_cast<int>(i);
    return -1;
}

}  // namespace loewner
