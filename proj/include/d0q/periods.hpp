#ifndef D0Q_PERIODS_HPP
#define D0Q_PERIODS_HPP

#include <stdexcept>
#include <vector>

#include "d0q/complex.hpp"
#include "d0q/curve.hpp"
#include "d0q/eisenstein.hpp"
#include "d0q/quadrature.hpp"

namespace d0q {

// Two independent period computations disagreed beyond tolerance.
class PeriodPathMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lattice failed the g2 = c4/12 consistency check.
class LatticeCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No candidate torsion index matched the point, or the match was ambiguous.
class TorsionMatchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Roots of f(x) = x^3 + c2 x^2 + c1 x + c0. If three_real, roots holds
// e1 >= e2 >= e3; otherwise roots[0] is the real root and the complex pair is
// roots[1] +- i*roots[2] with roots[2] > 0.
struct CubicRoots {
    bool three_real;
    Real r0, r1, r2;
};

inline Real cubic_newton(const Real& x0, const Real& c2, const Real& c1, const Real& c0) {
    Real x = x0;
    for (int it = 0; it < 3; ++it) {
        Real f = ((x + c2) * x + c1) * x + c0;
        Real df = (3L * x + 2L * c2) * x + c1;
        if (df.is_zero()) break;
        x = x - f / df;
    }
    return x;
}

inline CubicRoots cubic_roots(const Rational& qc2, const Rational& qc1, const Rational& qc0,
                              int disc_sign, mpfr_prec_t wp) {
    Real c2(qc2, wp), c1(qc1, wp), c0(qc0, wp);
    Real third = Real(1L, wp) / 3L;
    // depressed form y^3 + p y + q0, x = y - c2/3
    Real p = c1 - c2 * c2 * third;
    Real q0 = (2L * c2 * c2 * c2 / 27L) - c2 * c1 * third + c0;
    if (disc_sign > 0) {
        // three real roots, trigonometric method
        Real m = 2L * sqrt(-p * third);
        Real arg = 3L * q0 / (p * m);
        if (arg > Real(1L, wp)) arg = Real(1L, wp);
        if (arg < Real(-1L, wp)) arg = Real(-1L, wp);
        Real phi = acos(arg);
        Real two_pi = 2L * Real::pi(wp);
        std::vector<Real> xs;
        for (long k = 0; k < 3; ++k) {
            Real y = m * cos((phi + static_cast<long>(k) * two_pi) / 3L);
            xs.push_back(cubic_newton(y - c2 * third, c2, c1, c0));
        }
        std::sort(xs.begin(), xs.end(), [](const Real& a, const Real& b) { return b < a; });
        return {true, xs[0], xs[1], xs[2]};
    }
    // one real root (Cardano), then deflate to the conjugate pair
    Real d0c = c2 * c2 - 3L * c1;
    Real d1 = 2L * c2 * c2 * c2 - 9L * c2 * c1 + 27L * c0;
    Real s = sqrt(d1 * d1 - 4L * d0c * d0c * d0c); // positive when disc < 0
    Real big = (d1.sign() >= 0) ? (d1 + s) : (d1 - s);
    Real cb = cbrt(big / 2L);
    Real e1 = -(c2 + cb + d0c / cb) * third;
    e1 = cubic_newton(e1, c2, c1, c0);
    // remaining quadratic x^2 + (c2+e1) x + (c1 + e1(c2+e1))
    Real qb = c2 + e1;
    Real qc = c1 + e1 * qb;
    Real discq = qb * qb - 4L * qc; // negative
    Real re = -qb / 2L;
    Real im = sqrt(-discq) / 2L;
    return {false, e1, re, im};
}

} // namespace detail

// Normalized period data of a long Weierstrass model over Q with the real
// period Omega+ of the identity component and tau = omega2/omega1 with
// Re tau in {0, 1/2}.
struct PeriodData {
    Real omega_plus;
    Complex tau;
    Real q;          // real nome, q > 0 iff two real components
    int components;
    Real path_delta; // relative disagreement of the two period routes
};

namespace detail {

// Omega+ by tanh-sinh quadrature of dx/sqrt(f(x)) over [gamma, infinity),
// gamma the largest real root, split at gamma+1 and mapped to [0,1] twice.
// (x = gamma + u^2 and x = gamma + 1/v^2 remove both singularities; the
// resulting quartics have real coefficients in both root configurations.)
inline Real quad_real_period(const CubicRoots& rts, const Real& c2, const Real& c1,
                             mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    const Real& g = rts.r0; // largest (or only) real root in both configurations
    Real s1 = 3L * g + c2;              // (g-e2)+(g-e3)
    Real s2 = (3L * g + 2L * c2) * g + c1; // (g-e2)(g-e3) = f'(g)
    Real two(2L, wp);
    auto f1 = [&](const Real& u) {
        Real u2 = u * u;
        return two / sqrt((u2 * u2) + s1 * u2 + s2);
    };
    auto f2 = [&](const Real& v) {
        Real v2 = v * v;
        return two / sqrt(Real(1L, wp) + s1 * v2 + s2 * v2 * v2);
    };
    return integrate01(f1, prec) + integrate01(f2, prec);
}

} // namespace detail

// Full lattice normalization with a dual-path period cross-check (AGM vs
// quadrature, agreement to prec-32 bits) and a g2 = c4/12 self-check.
inline PeriodData period_lattice(const CurveModel& e, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    CurveInvariants inv = invariants(e);
    if (inv.disc == 0) throw std::domain_error("period_lattice: singular curve");
    int disc_sign = inv.disc > 0 ? 1 : -1;
    Rational qc2 = inv.b2 / 4, qc1 = inv.b4 / 2, qc0 = inv.b6 / 4;
    detail::CubicRoots rts = detail::cubic_roots(qc2, qc1, qc0, disc_sign, wp);

    Real om1_agm(wp), om1_quad(wp);
    Complex om2(wp);
    Real pi = Real::pi(wp);
    if (disc_sign > 0) {
        const Real &e1 = rts.r0, &e2 = rts.r1, &e3 = rts.r2;
        om1_agm = pi / agm(sqrt(e1 - e3), sqrt(e1 - e2));
        om2 = Complex(Real(0L, wp), pi / agm(sqrt(e1 - e3), sqrt(e2 - e3)));
    } else {
        const Real &e1 = rts.r0, &m = rts.r1, &n = rts.r2;
        Complex s13 = sqrt(Complex(e1 - m, n));  // e1 - conj(root)
        Complex s12 = sqrt(Complex(e1 - m, -n)); // e1 - root
        om1_agm = (Complex(Real(pi)) / agm(s13, s12)).re;
        Complex s23 = sqrt(Complex(Real(0L, wp), 2L * n)); // sqrt(root - conj(root)) = sqrt(2in)
        om2 = Complex(Real(0L, wp), Real(1L, wp)) * (Complex(Real(pi)) / agm(s13, s23));
    }
    om1_quad = detail::quad_real_period(rts, Real(qc2, wp), Real(qc1, wp), prec);

    Real delta = abs(om1_agm - om1_quad) / om1_quad;
    if (!(delta < Real::pow2(static_cast<long>(-(prec - 32)), wp)))
        throw PeriodPathMismatch("period_lattice: AGM and quadrature periods disagree (rel " +
                                 delta.str(8) + ")");

    Real om1 = disc_sign > 0 ? om1_agm : om1_quad;
    if (!(om1 > 0L)) throw std::logic_error("period_lattice: nonpositive real period");

    Complex tau = om2 / Complex(Real(om1));
    if (tau.im.sign() < 0) tau = -tau;
    // snap Re tau to the exact value {0, 1/2} forced by the component count
    Real re_frac = tau.re - floor(tau.re + Real(Rational(1, 2), wp));
    Real expected = disc_sign > 0 ? Real(0L, wp) : Real(Rational(1, 2), wp);
    if (!(abs(abs(re_frac) - expected) < Real::pow2(static_cast<long>(-prec / 2), wp)))
        throw LatticeCheckFailure("period_lattice: Re tau = " + tau.re.str(8) +
                                  " not at its forced rational value");
    tau = Complex(expected, tau.im);

    Real qmag = exp(-(2L * pi * tau.im));
    Real q = disc_sign > 0 ? qmag : -qmag;

    // self-check: g2 of om1*(Z + Z tau) must be c4/12
    {
        Real s(0L, wp);
        Real qn = q;
        Real eps = Real::pow2(static_cast<long>(-(prec + 8)), wp);
        for (long n = 1;; ++n) {
            Real t = Real(n, wp) * Real(n, wp) * Real(n, wp) * qn / (Real(1L, wp) - qn);
            s += t;
            if (abs(t) < eps) break;
            qn *= q;
            if (n > 4000000) throw std::runtime_error("period_lattice: g2 series stalled");
        }
        Real g2l = pow_si(2L * pi, 4) * (Real(1L, wp) + 240L * s) / 12L / pow_si(om1, 4);
        Rational c4 = inv.b2 * inv.b2 - 24 * inv.b4;
        Real target(c4 / 12, wp);
        Real scale = abs(target) + Real(1L, wp);
        if (!(abs(g2l - target) < Real::pow2(static_cast<long>(-(prec - 48)), wp) * scale))
            throw LatticeCheckFailure("period_lattice: g2 self-check failed");
    }

    return {om1, tau, q, disc_sign > 0 ? 2 : 1, delta};
}

enum class TorsionCase { A, B };

inline const char* torsion_case_name(TorsionCase c) { return c == TorsionCase::A ? "A" : "B"; }

struct TorsionIndex {
    long k0;
    TorsionCase kase;
    Real residual;  // matching residual of the accepted candidate
    Real runner_up; // residual of the best rejected candidate
};

// Identify the analytic coordinates of an exact N-torsion point: find (r,s)
// with z = (r tau + s)/N such that wp(z), wp'(z) on om1*(Z + Z tau) match the
// algebraic point. Candidates are s = k (case A, r = 0) and additionally
// r = N/2 (case B) when the lattice has two real components and N is even.
inline TorsionIndex torsion_parameters(const CurveModel& e, const CurvePoint& pt, int N,
                                       const PeriodData& pd, mpfr_prec_t prec) {
    if (pt.is_infinity()) throw std::invalid_argument("torsion_parameters: point at infinity");
    mpfr_prec_t wp = prec + 32;
    CurveInvariants inv = invariants(e);
    Real xq(pt.x() + inv.b2 / 12, wp);
    Real yq(2 * pt.y() + e.a1 * pt.x() + e.a3, wp);
    Real scale = Real(1L, wp) + abs(xq) + abs(yq);

    struct Cand {
        long k;
        TorsionCase kase;
        long r, s;
    };
    std::vector<Cand> cands;
    for (long k = 1; k < N; ++k) cands.push_back({k, TorsionCase::A, 0, k});
    if (N % 2 == 0 && pd.components == 2)
        for (long k = 0; k < N; ++k) cands.push_back({k, TorsionCase::B, N / 2, k});

    Real om2 = pow_si(pd.omega_plus, 2);
    Real om3 = pow_si(pd.omega_plus, 3);
    bool have_best = false;
    TorsionIndex best{0, TorsionCase::A, Real(wp), Real(wp)};
    Real second(wp);
    bool have_second = false;
    for (const auto& c : cands) {
        Complex vp = wp_qexp(pd.tau, c.r, c.s, N, prec) / Real(om2);
        Complex vpp = wp_prime_qexp(pd.tau, c.r, c.s, N, prec) / Real(om3);
        Real res = abs(vp - Complex(xq)) + abs(vpp - Complex(yq));
        if (!have_best || res < best.residual) {
            if (have_best) {
                second = best.residual;
                have_second = true;
            }
            best = {c.k, c.kase, res, Real(wp)};
            have_best = true;
        } else if (!have_second || res < second) {
            second = res;
            have_second = true;
        }
    }
    if (!have_best || !have_second) throw TorsionMatchFailure("torsion_parameters: no candidates");
    best.runner_up = second;
    if (!(best.residual < Real::pow2(static_cast<long>(-(prec - 48)), wp) * scale))
        throw TorsionMatchFailure("torsion_parameters: best candidate residual too large (" +
                                  best.residual.str(8) + ")");
    if (!(second > Real::pow2(static_cast<long>(-prec / 2), wp)))
        throw TorsionMatchFailure("torsion_parameters: ambiguous match");
    return best;
}

} // namespace d0q

#endif
