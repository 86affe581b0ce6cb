#ifndef D0Q_CURVE_HPP
#define D0Q_CURVE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "d0q/rational.hpp"

namespace d0q {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct CurveModel {
    Rational a1, a2, a3, a4, a6;
};

struct CurveInvariants {
    Rational b2, b4, b6, b8, disc;
};

inline CurveInvariants invariants(const CurveModel& e) {
    CurveInvariants v;
    v.b2 = e.a1 * e.a1 + 4 * e.a2;
    v.b4 = 2 * e.a4 + e.a1 * e.a3;
    v.b6 = e.a3 * e.a3 + 4 * e.a6;
    v.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    return v;
}

// Affine point or the point at infinity.
struct CurvePoint {
    std::optional<std::pair<Rational, Rational>> xy;

    static CurvePoint infinity() { return {}; }
    static CurvePoint affine(Rational x, Rational y) {
        return {std::make_pair(std::move(x), std::move(y))};
    }
    bool is_infinity() const { return !xy.has_value(); }
    const Rational& x() const { return xy->first; }
    const Rational& y() const { return xy->second; }

    friend bool operator==(const CurvePoint& p, const CurvePoint& q) { return p.xy == q.xy; }
};

inline bool on_curve(const CurveModel& e, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    const Rational &x = p.x(), &y = p.y();
    return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

inline CurvePoint neg(const CurveModel& e, const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.x(), -p.y() - e.a1 * p.x() - e.a3);
}

// Chord-tangent group law, exact.
inline CurvePoint add(const CurveModel& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational lambda, nu;
    if (x1 == x2) {
        if (y1 + y2 + e.a1 * x2 + e.a3 == 0) return CurvePoint::infinity();
        Rational d = 2 * y1 + e.a1 * x1 + e.a3;
        lambda = (3 * x1 * x1 + 2 * e.a2 * x1 + e.a4 - e.a1 * y1) / d;
        nu = (-(x1 * x1 * x1) + e.a4 * x1 + 2 * e.a6 - e.a3 * y1) / d;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
        nu = (y1 * x2 - y2 * x1) / (x2 - x1);
    }
    Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - x1 - x2;
    Rational y3 = -(lambda + e.a1) * x3 - nu - e.a3;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

inline CurvePoint scalar_mul(const CurveModel& e, long n, CurvePoint p) {
    if (n < 0) {
        n = -n;
        p = neg(e, p);
    }
    CurvePoint acc = CurvePoint::infinity();
    while (n) {
        if (n & 1) acc = add(e, acc, p);
        p = add(e, p, p);
        n >>= 1;
    }
    return acc;
}

// Smallest n >= 1 with n*P = O, or nullopt if none up to the bound.
inline std::optional<long> point_order(const CurveModel& e, const CurvePoint& p, long bound) {
    if (bound < 1) throw std::invalid_argument("point_order: bound must be >= 1");
    CurvePoint q = p;
    for (long n = 1; n <= bound; ++n) {
        if (q.is_infinity()) return n;
        q = add(e, q, p);
    }
    return std::nullopt;
}

} // namespace d0q

#endif
