#ifndef D0Q_RECOGNIZE_HPP
#define D0Q_RECOGNIZE_HPP

#include <optional>
#include <stdexcept>

#include "d0q/real.hpp"

namespace d0q {

struct Recognition {
    Rational value;
    Real residual;  // |x - value|
    Integer height; // max(|num|, den)
};

// Find the unique rational of height <= max_height within tol of x, via
// continued-fraction convergents of the exact binary value of x. Uniqueness
// is guaranteed by the precondition tol < 1/(4 max_height^2): two distinct
// candidates would be >= 1/max_height^2 > 2 tol apart.
inline std::optional<Recognition> recognize_rational(const Real& x, const Integer& max_height,
                                                     const Real& tol) {
    if (max_height < 1) throw std::invalid_argument("recognize_rational: max_height must be >= 1");
    if (!(tol > 0L)) throw std::invalid_argument("recognize_rational: tol must be positive");
    {
        Rational gap = Rational(1) / (4 * Rational(max_height) * Rational(max_height));
        if (!(tol < Real(gap, tol.prec())))
            throw std::invalid_argument("recognize_rational: tol too large for uniqueness");
    }
    Rational X = x.to_rational();
    // convergents p/q of the continued fraction of X, in increasing q
    Integer p_prev(1), q_prev(0);
    Integer p_cur(0), q_cur(0);
    Rational rem = X;
    bool first = true;
    while (true) {
        Integer num = numerator(rem), den = denominator(rem);
        Integer a;
        if (num >= 0)
            a = num / den;
        else
            a = Integer(-((-num + den - 1) / den)); // floor for negatives
        // a partial quotient this large means the previous convergent already
        // agrees with x beyond its own precision: treat it as infinity
        if (!first && a > (Integer(1) << static_cast<unsigned>(x.prec() / 2))) return std::nullopt;
        Integer p_next = first ? a : a * p_cur + p_prev;
        Integer q_next = first ? Integer(1) : a * q_cur + q_prev;
        if (!first) {
            p_prev = p_cur;
            q_prev = q_cur;
        }
        p_cur = p_next;
        q_cur = q_next;
        first = false;
        if (q_cur > max_height) return std::nullopt;
        Rational cand(p_cur, q_cur);
        if (height(cand) <= max_height) {
            Rational diff = X - cand;
            if (diff < 0) diff = -diff;
            Real res(diff, x.prec());
            if (res <= tol) return Recognition{cand, res, height(cand)};
        }
        Rational frac = rem - Rational(a);
        if (frac == 0) return std::nullopt; // expansion exhausted without a hit
        rem = Rational(1) / frac;
    }
}

} // namespace d0q

#endif
