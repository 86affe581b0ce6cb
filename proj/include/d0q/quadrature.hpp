#ifndef D0Q_QUADRATURE_HPP
#define D0Q_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

#include "d0q/real.hpp"

namespace d0q {

// Tanh-sinh (double-exponential) quadrature on [0,1]. Converges at
// exponential rate for integrands analytic on the closed interval (and
// tolerates endpoint singularities).
inline Real integrate01(const std::function<Real(const Real&)>& f, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Real pi_half = Real::pi(wp) / 2L;
    Real eps = Real::pow2(static_cast<long>(-(prec + 8)), wp);
    Real half(Rational(1, 2), wp);
    Real one(1L, wp);

    // sum over nodes t = kh of f(x(t)) * x'(t); x = 1/(1 + e^{-2s}) avoids
    // cancellation near the x = 0 endpoint, so integrands singular at 0 still
    // converge to full precision
    auto node_sum = [&](const Real& h) {
        Real total = pi_half * half * f(half); // t = 0: x = 1/2, x' = pi/4
        for (int side = 0; side < 2; ++side) {
            long k = 1;
            int small = 0;
            while (true) {
                Real t = static_cast<long>(side == 0 ? k : -k) * h;
                Real s = pi_half * sinh(t);
                Real ch = cosh(s);
                Real w = pi_half * cosh(t) / (ch * ch) * half;
                Real x = one / (one + exp(-(2L * s)));
                Real term = w * f(x);
                total += term;
                // cut off on the full term, not the weight alone: endpoint
                // singularities make f blow up where w decays
                if (abs(term) < eps && k > 4) {
                    if (++small >= 2) break;
                } else {
                    small = 0;
                }
                ++k;
                if (k > 1000000) throw std::runtime_error("integrate01: node overflow");
            }
        }
        return total;
    };

    Real h(1L, wp);
    Real estimate = node_sum(h) * h;
    for (int level = 1; level <= 14; ++level) {
        h = h / 2L;
        Real next = node_sum(h) * h;
        Real scale = abs(next) + one;
        if (abs(next - estimate) < eps * scale && level >= 3) return next;
        estimate = next;
    }
    throw std::runtime_error("integrate01: failed to converge");
}

} // namespace d0q

#endif
