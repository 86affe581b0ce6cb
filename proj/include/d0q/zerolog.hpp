#ifndef D0Q_ZEROLOG_HPP
#define D0Q_ZEROLOG_HPP

#include <stdexcept>

#include "d0q/complex.hpp"

namespace d0q {

// D0(z) = Im(z/(1-z)), with D0(1) = 0 by convention.
inline Real d0(const Complex& z) {
    Complex one(1L, z.prec());
    Complex d = one - z;
    if (d.is_zero()) return Real(0L, z.prec());
    return (z / d).im;
}

struct QAverageResult {
    Real value;
    long terms_used;
    Real tail_bound;
};

// q-average D_{0,q}(z) = sum_{n in Z} D0(z q^n) for real 0 < |q| < 1.
// Torsion arguments are folded using D0(z q^{-j}) = D0(z q^j) for |z| = 1
// and D0(z q^{-j}) = D0(z q^{j-1}) for |z| = |q|^{1/2} (q > 0); other
// arguments are summed two-sided with explicit tail bounds.
inline QAverageResult d0_q_average(const Complex& z, const Real& q, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Real aq = abs(q);
    Real one(1L, wp);
    if (!(aq < one) || q.is_zero())
        throw std::domain_error("d0_q_average: need 0 < |q| < 1");
    Real eps = Real::pow2(static_cast<long>(-(prec + 16)), wp);
    Real pole_eps = Real::pow2(static_cast<long>(-wp + 8), wp);
    Real denom2 = (one - aq) * (one - aq);
    Real az = abs(z);
    Real near = Real::pow2(static_cast<long>(-wp / 2), wp);

    auto term = [&](const Complex& w) {
        Real gap = abs(Complex(1L, wp) - w);
        if (gap < pole_eps && !(Complex(1L, wp) - w).is_zero())
            throw std::domain_error("d0_q_average: argument hits the pole orbit z = q^n");
        return d0(w);
    };

    long terms = 0;
    if (abs(az - one) < near) {
        // case A fold
        Real s = term(z);
        ++terms;
        Complex w = z;
        long j = 1;
        Real qj = q;
        while (true) {
            w = w * Complex(Real(q));
            s += 2L * term(w);
            ++terms;
            Real bound = 2L * abs(qj) / denom2;
            if (bound < eps) return {s, terms, bound};
            qj *= q;
            ++j;
            if (j > 4000000) throw std::runtime_error("d0_q_average: |q| too close to 1");
        }
    }
    if (q.sign() > 0 && abs(az - sqrt(aq)) < near * sqrt(aq)) {
        // case B fold
        Real s(0L, wp);
        Complex w = z;
        Real qj = sqrt(aq);
        long j = 0;
        while (true) {
            s += 2L * term(w);
            ++terms;
            Real bound = 2L * qj / denom2;
            if (bound < eps) return {s, terms, bound};
            w = w * Complex(Real(q));
            qj *= aq;
            ++j;
            if (j > 4000000) throw std::runtime_error("d0_q_average: |q| too close to 1");
        }
    }
    // generic two-sided sum
    Real s(0L, wp);
    Real tail(0L, wp);
    {
        Complex w = z;
        Real qj = one;
        while (true) {
            s += term(w);
            ++terms;
            qj *= aq;
            Real bound = az * qj / denom2;
            if (bound < eps) {
                tail += bound;
                break;
            }
            w = w * Complex(Real(q));
            if (terms > 4000000) throw std::runtime_error("d0_q_average: |q| too close to 1");
        }
    }
    {
        Complex qinv = Complex(Real(one / q));
        Complex w = z * qinv;
        Real qj = aq;
        Real two(2L, wp);
        while (true) {
            s += term(w);
            ++terms;
            // |D0(w)| <= 1/(|w|-1) once |w| > 1; next magnitudes grow by 1/|q|
            Real mag = az / qj;
            if (mag > two) {
                Real bound = (two / mag) * aq / (one - aq);
                if (bound < eps) {
                    tail += bound;
                    break;
                }
            }
            w = w * qinv;
            qj *= aq;
            if (terms > 8000000) throw std::runtime_error("d0_q_average: |q| too close to 1");
        }
    }
    return {s, terms, tail};
}

} // namespace d0q

#endif
