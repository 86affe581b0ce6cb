#ifndef D0Q_REAL_HPP
#define D0Q_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "d0q/rational.hpp"

namespace d0q {

// Arbitrary-precision real scalar. Every value carries its working precision
// in bits; binary operations produce results at the larger of the two operand
// precisions, so precision is never silently reduced.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(const Rational& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.backend().data(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Exact conversion: every finite mpfr value is m*2^e.
    Rational to_rational() const {
        if (!mpfr_number_p(v_)) throw std::domain_error("Real::to_rational: not finite");
        if (mpfr_zero_p(v_)) return Rational(0);
        mpz_t m;
        mpz_init(m);
        mpfr_exp_t e = mpfr_get_z_2exp(m, v_);
        Integer mm(m);
        mpz_clear(m);
        Rational r(mm);
        Rational two(2);
        if (e >= 0) {
            for (mpfr_exp_t i = 0; i < e; ++i) r *= two;
        } else {
            for (mpfr_exp_t i = 0; i < -e; ++i) r /= two;
        }
        return r;
    }

    std::string str(size_t digits = 0) const {
        if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
        char* out = nullptr;
        if (mpfr_asprintf(&out, fmt, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real from_str(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("cannot parse real: '" + s + "'");
        return r;
    }
    // 2^e
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) {
        Real r(b.prec());
        mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

private:
    mpfr_t v_;
};

#define D0Q_REAL_UNARY(name, mpfr_name)          \
    inline Real name(const Real& a) {            \
        Real r(a.prec());                        \
        mpfr_name(r.raw(), a.raw(), MPFR_RNDN);  \
        return r;                                \
    }

D0Q_REAL_UNARY(sqrt, mpfr_sqrt)
D0Q_REAL_UNARY(cbrt, mpfr_cbrt)
D0Q_REAL_UNARY(exp, mpfr_exp)
D0Q_REAL_UNARY(log, mpfr_log)
D0Q_REAL_UNARY(sin, mpfr_sin)
D0Q_REAL_UNARY(cos, mpfr_cos)
D0Q_REAL_UNARY(tanh, mpfr_tanh)
D0Q_REAL_UNARY(sinh, mpfr_sinh)
D0Q_REAL_UNARY(cosh, mpfr_cosh)
D0Q_REAL_UNARY(acos, mpfr_acos)
D0Q_REAL_UNARY(abs, mpfr_abs)
inline Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
    return r;
}
inline Real round_nearest(const Real& a) {
    Real r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDNA);
    return r;
}

#undef D0Q_REAL_UNARY

inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Real pow_si(const Real& a, long n) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

// Arithmetic-geometric mean of two positive reals.
inline Real agm(const Real& a, const Real& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::domain_error("agm: arguments must be positive");
    Real r(std::max(a.prec(), b.prec()));
    mpfr_agm(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

} // namespace d0q

#endif
