#ifndef D0Q_EISENSTEIN_HPP
#define D0Q_EISENSTEIN_HPP

#include <stdexcept>
#include <vector>

#include "d0q/complex.hpp"
#include "d0q/cyclotomic.hpp"

namespace d0q {

class InsufficientTruncation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// zeta(0, alpha) = 1/2 - alpha for 0 < alpha <= 1 (alpha = 1 gives zeta(0) = -1/2).
inline Rational hurwitz_zeta_zero(const Rational& alpha) {
    if (!(alpha > 0 && alpha <= 1))
        throw std::domain_error("hurwitz_zeta_zero: alpha must lie in (0,1]");
    return Rational(1, 2) - alpha;
}

// Index (a,b) of the level-N weight-one Eisenstein series, (a,b) != (0,0) mod N.
struct HeckeIndex {
    int N;
    int a;
    int b;
};

inline void check_index(const HeckeIndex& idx) {
    if (idx.N < 1) throw std::invalid_argument("HeckeIndex: N must be positive");
    if (idx.a % idx.N == 0 && idx.b % idx.N == 0)
        throw std::invalid_argument("HeckeIndex: (a,b) must not be (0,0) mod N");
}

namespace detail {

inline int mod(long x, int N) { return static_cast<int>(((x % N) + N) % N); }

// positive divisors of n
inline std::vector<long> divisors(long n) {
    std::vector<long> out, high;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    out.insert(out.end(), high.rbegin(), high.rend());
    return out;
}

// (zeta^k + 1) / (den * (zeta^k - 1)), exact; requires zeta^k != 1
inline CycloElem cot_like(int N, int k, const Rational& den) {
    CycloElem zk = CycloElem::zeta_pow(N, k);
    CycloElem one(N, Rational(1));
    return (zk + one) * ((den * (zk - one)).inverse());
}

} // namespace detail

// Coefficient of q^{n/N} in the level-N Eisenstein series G_{a,b}, normalized
// by 1/(2 pi i) so that it lies in Q(zeta_N).
inline CycloElem alpha_coeff(const HeckeIndex& idx, long n) {
    check_index(idx);
    const int N = idx.N;
    const int a = detail::mod(idx.a, N), b = detail::mod(idx.b, N);
    if (n < 0) throw std::invalid_argument("alpha_coeff: n must be >= 0");
    if (n == 0) {
        CycloElem out(N);
        if (a == 0 && b != 0) out += detail::cot_like(N, b, Rational(2 * N));
        if (a != 0) out += CycloElem(N, Rational(2 * a - N, 2 * N * N)); // (1/2N)(2a/N - 1)
        return out;
    }
    // -(1/N) sum over signed divisors m of n with n/m = a (mod N) of sgn(m) zeta^{bm}
    CycloElem acc(N);
    for (long d : detail::divisors(n)) {
        long quot = n / d;
        if (detail::mod(quot, N) == a) acc += CycloElem::zeta_pow(N, static_cast<long>(b) * d);
        if (detail::mod(-quot, N) == a) acc -= CycloElem::zeta_pow(N, -static_cast<long>(b) * d);
    }
    return Rational(-1, N) * acc;
}

// Coefficient of q^n in g_k = (1/i) D_{0,q}(zeta_N^k) for real q.
inline CycloElem gk_coeff(int N, int k, long n) {
    if (N < 1 || k <= 0 || k >= N) throw std::invalid_argument("gk_coeff: need 0 < k < N");
    if (n == 0) return detail::cot_like(N, k, Rational(2));
    CycloElem acc(N);
    for (long d : detail::divisors(n))
        acc += CycloElem::zeta_pow(N, static_cast<long>(k) * d) -
               CycloElem::zeta_pow(N, -static_cast<long>(k) * d);
    return -acc;
}

// Coefficient of q^{n/2} in h_k = (1/i) D_{0,q}(zeta_N^k q^{1/2}); N even.
inline CycloElem hk_coeff(int N, int k, long n) {
    if (N % 2 != 0) throw std::invalid_argument("hk_coeff: N must be even");
    if (n == 0) return CycloElem(N);
    CycloElem acc(N);
    for (long m : detail::divisors(n)) {
        if (m % 2 == 0) continue;
        long e = static_cast<long>(k) * (n / m);
        acc += CycloElem::zeta_pow(N, e) - CycloElem::zeta_pow(N, -e);
    }
    return -acc;
}

enum class CuspTwist { plain, half };

// Coefficient of q^{n/N} in the expansion of G' at the cusp tau = 0, which is
// rational-valued: constant l/N - 1/2, then -sum over signed divisors m = l
// (mod N) of sgn(m) (with an extra (-1)^{n/m} for the half twist).
inline Rational gprime_cusp0_coeff(int N, int ell, CuspTwist twist, long n) {
    if (ell <= 0 || ell >= N || gcd(Integer(ell), Integer(N)) != 1)
        throw std::invalid_argument("gprime_cusp0_coeff: need 0 < ell < N coprime to N");
    if (n == 0) return Rational(ell, N) - Rational(1, 2);
    Rational acc(0);
    for (long d : detail::divisors(n)) {
        // m = +d and m = -d have the same (-1)^{n/m} parity factor
        long parity = (twist == CuspTwist::half && (n / d) % 2 != 0) ? -1 : 1;
        if (detail::mod(d, N) == ell) acc += parity;
        if (detail::mod(-d, N) == ell) acc -= parity;
    }
    return -acc;
}

// q-expansion with exponent grid n/denom and exact cyclotomic coefficients.
struct QExpansion {
    int N;
    long denom;
    std::vector<CycloElem> coeffs; // coeffs[n] multiplies q^{n/denom}

    long n_max() const { return static_cast<long>(coeffs.size()) - 1; }
};

inline QExpansion gk_expansion(int N, int k, long terms) {
    QExpansion e{N, 1, {}};
    e.coeffs.reserve(terms + 1);
    for (long n = 0; n <= terms; ++n) e.coeffs.push_back(gk_coeff(N, k, n));
    return e;
}

inline QExpansion hk_expansion(int N, int k, long terms) {
    QExpansion e{N, 2, {}};
    e.coeffs.reserve(terms + 1);
    for (long n = 0; n <= terms; ++n) e.coeffs.push_back(hk_coeff(N, k, n));
    return e;
}

inline QExpansion gab_expansion(const HeckeIndex& idx, long terms) {
    QExpansion e{idx.N, idx.N, {}};
    e.coeffs.reserve(terms + 1);
    for (long n = 0; n <= terms; ++n) e.coeffs.push_back(alpha_coeff(idx, n));
    return e;
}

inline QExpansion cusp0_expansion(int N, int ell, CuspTwist twist, long terms) {
    QExpansion e{N, static_cast<long>(N), {}};
    e.coeffs.reserve(terms + 1);
    for (long n = 0; n <= terms; ++n)
        e.coeffs.push_back(CycloElem(N, gprime_cusp0_coeff(N, ell, twist, n)));
    return e;
}

// Numeric evaluation sum_n coeffs[n] q^{n/denom} at q = exp(2 pi i tau).
// Throws InsufficientTruncation when the geometric tail bound cannot reach
// 2^-(prec+16).
inline Complex eval_series(const QExpansion& e, const Complex& tau, mpfr_prec_t prec) {
    if (!(tau.im > 0L)) throw std::domain_error("eval_series: Im tau must be positive");
    mpfr_prec_t wp = prec + 32;
    Complex w = q_frac_pow(tau, Rational(1, e.denom), wp);
    Real aw = abs(w);
    // |coeff_n| <= 2 d(n) + constant-term slack; use 4(n+2) + N
    long n_max = e.n_max();
    Real bound = (4L * Real(n_max + 2, wp) + Real(e.N, wp)) * pow_si(aw, n_max + 1) /
                 ((Real(1L, wp) - aw) * (Real(1L, wp) - aw));
    if (!(bound < Real::pow2(static_cast<long>(-(prec + 16)), wp)))
        throw InsufficientTruncation("eval_series: n_max too small for requested precision");

    // zeta-power table for embedding
    std::vector<Complex> zeta(e.N, Complex(wp));
    Real step = 2L * Real::pi(wp) / static_cast<long>(e.N);
    for (int i = 0; i < e.N; ++i) {
        Real ang = static_cast<long>(i) * step;
        zeta[i] = Complex(cos(ang), sin(ang));
    }
    auto embed = [&](const CycloElem& c) {
        Complex acc(wp);
        for (int i = 0; i < e.N; ++i)
            if (c[i] != 0) acc += Real(c[i], wp) * zeta[i];
        return acc;
    };

    Complex acc(wp);
    for (long n = n_max; n >= 0; --n) acc = acc * w + embed(e.coeffs[static_cast<size_t>(n)]);
    return acc;
}

// Terms needed so that (4(n+2)+N) |w|^{n+1}/(1-|w|)^2 < 2^-(prec+16),
// |w| = |q|^{1/denom}.
inline long series_terms_for(const Real& abs_q, long denom, int N, mpfr_prec_t prec) {
    mpfr_prec_t wp = abs_q.prec();
    Real aw = exp(log(abs_q) / denom);
    Real target = Real::pow2(static_cast<long>(-(prec + 17)), wp);
    Real om = Real(1L, wp) - aw;
    for (long n = 32;; n *= 2) {
        Real bound = (4L * Real(n + 2, wp) + Real(N, wp)) * pow_si(aw, n + 1) / (om * om);
        if (bound < target) return n;
        if (n > 4000000) throw InsufficientTruncation("series_terms_for: |q| too close to 1");
    }
}

// Lang's F(q,w) = -1/2 - w/(1-w) - sum_{j>=1} q^j w/(1-q^j w)
//                            + sum_{j>=1} q^j w^-1/(1-q^j w^-1).
inline Complex lang_F(const Complex& q, const Complex& w, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Real aq = abs(q);
    if (!(aq < Real(1L, wp))) throw std::domain_error("lang_F: need |q| < 1");
    Real pole_eps = Real::pow2(static_cast<long>(-wp / 2), wp);
    Complex one(1L, wp);
    if (abs(one - w) < pole_eps) throw std::domain_error("lang_F: w is at a pole");
    Complex winv = one / w;
    Complex acc = Complex(Real(Rational(-1, 2), wp)) - w / (one - w);
    Real grow = abs(w) > abs(winv) ? abs(w) : abs(winv);
    Complex qj = q;
    Real eps = Real::pow2(static_cast<long>(-(prec + 16)), wp);
    for (long j = 1;; ++j) {
        if (abs(one - qj * w) < pole_eps || abs(one - qj * winv) < pole_eps)
            throw std::domain_error("lang_F: series term at a pole");
        Complex t1 = qj * w / (one - qj * w);
        Complex t2 = qj * winv / (one - qj * winv);
        acc += t2 - t1;
        if (abs(qj) * grow / (Real(1L, wp) - aq) < eps) break;
        qj *= q;
        if (j > 2000000) throw InsufficientTruncation("lang_F: |q| too close to 1");
    }
    return acc;
}

// Weierstrass p-function on the lattice 2 pi i (Z + Z tau) evaluated at
// 2 pi i (r tau + s)/N via its q-expansion; wp_prime is the term-by-term
// derivative in the argument variable.
inline Complex wp_qexp(const Complex& tau, long r, long s, int N, mpfr_prec_t prec) {
    if (detail::mod(r, N) == 0 && detail::mod(s, N) == 0)
        throw std::domain_error("wp_qexp: (r,s) on the lattice");
    mpfr_prec_t wp = prec + 32;
    Complex q = q_frac_pow(tau, Rational(1), wp);
    Complex w = q_frac_pow(tau, Rational(r, N), wp) *
                CycloElem::zeta_pow(N, s).embed(wp);
    Complex one(1L, wp);
    Complex acc = Complex(Real(Rational(1, 12), wp)) + w / ((one - w) * (one - w));
    Real aq = abs(q);
    Real eps = Real::pow2(static_cast<long>(-(prec + 16)), wp);
    Complex qn = q;
    for (long n = 1;; ++n) {
        Complex t = qn * w / ((one - qn * w) * (one - qn * w)) +
                    qn / w / ((one - qn / w) * (one - qn / w)) -
                    2L * qn / ((one - qn) * (one - qn));
        acc += t;
        Real mag = abs(qn) * (abs(w) + abs(one / w) + Real(2L, wp)) /
                   ((Real(1L, wp) - aq) * (Real(1L, wp) - aq));
        if (mag < eps) break;
        qn *= q;
        if (n > 2000000) throw InsufficientTruncation("wp_qexp: |q| too close to 1");
    }
    Complex minus_four_pi2 = Complex(-(2L * Real::pi(wp)) * (2L * Real::pi(wp)));
    return minus_four_pi2 * acc;
}

inline Complex wp_prime_qexp(const Complex& tau, long r, long s, int N, mpfr_prec_t prec) {
    if (detail::mod(r, N) == 0 && detail::mod(s, N) == 0)
        throw std::domain_error("wp_prime_qexp: (r,s) on the lattice");
    mpfr_prec_t wp = prec + 32;
    Complex q = q_frac_pow(tau, Rational(1), wp);
    Complex w = q_frac_pow(tau, Rational(r, N), wp) *
                CycloElem::zeta_pow(N, s).embed(wp);
    Complex one(1L, wp);
    Complex omw = one - w;
    Complex acc = w * (one + w) / (omw * omw * omw);
    Real aq = abs(q);
    Real eps = Real::pow2(static_cast<long>(-(prec + 16)), wp);
    Complex qn = q;
    for (long n = 1;; ++n) {
        Complex dw = one - qn * w;
        Complex dwi = one - qn / w;
        Complex t = qn * w * (one + qn * w) / (dw * dw * dw) -
                    qn / w * (one + qn / w) / (dwi * dwi * dwi);
        acc += t;
        Real mag = 4L * abs(qn) * (abs(w) + abs(one / w)) /
                   ((Real(1L, wp) - aq) * (Real(1L, wp) - aq) * (Real(1L, wp) - aq));
        if (mag < eps) break;
        qn *= q;
        if (n > 2000000) throw InsufficientTruncation("wp_prime_qexp: |q| too close to 1");
    }
    // (2 pi i)^3 = -8 pi^3 i
    Real pi3 = pow_si(2L * Real::pi(wp), 3);
    return Complex(Real(0L, wp), -pi3) * acc;
}

} // namespace d0q

#endif
