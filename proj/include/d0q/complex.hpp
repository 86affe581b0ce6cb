#ifndef D0Q_COMPLEX_HPP
#define D0Q_COMPLEX_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

#include "d0q/real.hpp"

namespace d0q {

// Complex scalar built on two Reals of equal precision.
class Complex {
public:
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(Real(0L, r.prec())) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    static Complex i(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

    std::string str(size_t digits = 0) const {
        return "(" + re.str(digits) + (im.sign() >= 0 ? " + " : " - ") + abs(im).str(digits) + "i)";
    }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator*(long a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Complex& a, long b) { return {b * a.re, b * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw std::domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal square root (branch cut along the negative real axis).
inline Complex sqrt(const Complex& z) {
    mpfr_prec_t p = z.prec();
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return Complex(sqrt(z.re));
        return {Real(0L, p), sqrt(-z.re)};
    }
    Real m = abs(z);
    Real u = sqrt((m + z.re) / 2L);
    Real v = sqrt((m - z.re) / 2L);
    if (z.im.sign() < 0) v = -v;
    return {u, v};
}

inline Complex pow_si(const Complex& z, long n) {
    Complex acc(1L, z.prec());
    Complex base = z;
    bool invert = n < 0;
    unsigned long m = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (m) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    if (invert) return Complex(1L, z.prec()) / acc;
    return acc;
}

// exp(2*pi*i * tau * x): fractional powers of q = exp(2*pi*i*tau) with the
// branch fixed by tau itself, never by extracting a root of q.
inline Complex q_frac_pow(const Complex& tau, const Rational& x, mpfr_prec_t prec) {
    if (!(tau.im > 0L)) throw std::domain_error("q_frac_pow: Im tau must be positive");
    Real xr(x, prec);
    Real two_pi = 2L * Real::pi(prec);
    // exp(2 pi i (a+bi) x) = exp(-2 pi b x) * (cos(2 pi a x) + i sin(2 pi a x))
    Real ang = two_pi * tau.re * xr;
    Real mag = exp(-(two_pi * tau.im * xr));
    return {mag * cos(ang), mag * sin(ang)};
}

// Optimal-branch complex AGM: at each step the square root is chosen so the
// pair stays as close together as possible. For conjugate inputs the limit
// is real.
inline Complex agm(Complex a, Complex b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real eps = Real::pow2(static_cast<long>(-p + 4), p);
    for (int it = 0; it < 4 * 64; ++it) {
        if (abs(a - b) <= eps * abs(a)) break;
        Complex a1 = (a + b) / Real(2L, p);
        Complex b1 = sqrt(a * b);
        if (abs(a1 - b1) > abs(a1 + b1)) b1 = -b1;
        a = a1;
        b = b1;
    }
    return a;
}

} // namespace d0q

#endif
