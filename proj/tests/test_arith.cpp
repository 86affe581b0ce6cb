#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d0q/complex.hpp"
#include "d0q/quadrature.hpp"
#include "d0q/rational.hpp"
#include "d0q/real.hpp"

using namespace d0q;

namespace {
bool close(const Real& a, const Real& b, long bits) {
    return abs(a - b) < Real::pow2(-bits, a.prec()) * (Real(1L, a.prec()) + abs(b));
}
} // namespace

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(height(Rational(-22, 7)) == 22);
    CHECK(height(Rational(3, 700)) == 700);
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("real basics and precision propagation") {
    Real a(Rational(1, 3), 256);
    Real b(2L, 64);
    CHECK((a * b).prec() == 256);
    CHECK((a + b).prec() == 256);
    Real third = Real(1L, 256) / Real(3L, 256);
    CHECK(close(a, third, 250));
    CHECK(Real::pow2(-10, 64).to_double() == doctest::Approx(1.0 / 1024));
    // exact binary round trip
    Real x(Rational(355, 512), 128);
    CHECK(x.to_rational() == Rational(355, 512));
    CHECK(Real::from_str("0.25", 64).to_rational() == Rational(1, 4));
}

TEST_CASE("real transcendental spot values") {
    mpfr_prec_t p = 256;
    Real pi = Real::pi(p);
    CHECK(close(sin(pi / 6L), Real(Rational(1, 2), p), 250));
    CHECK(close(exp(Real(0L, p)), Real(1L, p), 250));
    CHECK(close(log(exp(Real(3L, p))), Real(3L, p), 245));
    CHECK(close(atan2(Real(1L, p), Real(1L, p)), pi / 4L, 250));
}

TEST_CASE("agm against the defining iteration") {
    mpfr_prec_t p = 384;
    // independent oracle (mpmath): agm(2,3)
    Real expect = Real::from_str(
        "2.47468043623630446260665960359140148925167409406673586682618274063048589620700725239268349463826699799"
        "88137408",
        p);
    CHECK(close(agm(Real(2L, p), Real(3L, p)), expect, 350));
    // hand-rolled iteration oracle
    Real a(2L, p), b(3L, p);
    for (int i = 0; i < 60; ++i) {
        Real a1 = (a + b) / 2L;
        Real b1 = sqrt(a * b);
        a = a1;
        b = b1;
    }
    CHECK(close(agm(Real(2L, p), Real(3L, p)), a, 380));
    CHECK_THROWS_AS(agm(Real(-1L, p), Real(2L, p)), std::domain_error);
}

TEST_CASE("complex arithmetic and principal sqrt") {
    mpfr_prec_t p = 256;
    Complex i = Complex::i(p);
    Complex z = (Complex(3L, p) + 2L * i) * (Complex(1L, p) - i);
    CHECK(close(z.re, Real(5L, p), 250));
    CHECK(close(z.im, -Real(1L, p), 250));
    Complex s = sqrt(Complex(-4L, p));
    CHECK(close(s.re, Real(0L, p), 250));
    CHECK(close(s.im, Real(2L, p), 250));
    // sqrt(z)^2 = z off the cut
    Complex w(Real(-3L, p), Real(4L, p));
    Complex r = sqrt(w);
    CHECK(close(abs(r * r - w), Real(0L, p), 245));
    CHECK(r.im.sign() > 0);
    CHECK(close(abs(exp(i * Real::pi(p)) + Complex(1L, p)), Real(0L, p), 248));
}

TEST_CASE("q_frac_pow fixes the branch by tau") {
    mpfr_prec_t p = 256;
    // tau = 1/2 + i: q is negative real; q^{1/2} must be exp(pi i tau), not a
    // principal root of q
    Complex tau(Real(Rational(1, 2), p), Real(1L, p));
    Complex q = q_frac_pow(tau, Rational(1), p);
    CHECK(close(q.im, Real(0L, p), 240));
    CHECK(q.re.sign() < 0);
    Complex h = q_frac_pow(tau, Rational(1, 2), p);
    CHECK(close(abs(h * h - q), Real(0L, p), 240));
    CHECK(h.im.sign() > 0); // exp(pi i /2) direction, upper half
    CHECK_THROWS_AS(q_frac_pow(Complex(Real(0L, p), Real(-1L, p)), Rational(1), p),
                    std::domain_error);
}

TEST_CASE("complex agm of conjugate pair is real") {
    mpfr_prec_t p = 320;
    Complex a(Real(3L, p), Real(2L, p));
    Complex b = conj(a);
    Complex m = agm(a, b);
    CHECK(close(m.im, Real(0L, p), 300));
    CHECK(m.re > 0L);
}

TEST_CASE("tanh-sinh quadrature") {
    mpfr_prec_t p = 320;
    Real pi = Real::pi(p);
    // smooth: int_0^1 4/(1+x^2) = pi
    Real v = integrate01([&](const Real& x) { return 4L * Real(1L, p) / (Real(1L, p) + x * x); },
                         p);
    CHECK(close(v, pi, 300));
    // endpoint singularity at 0: int_0^1 1/(2 sqrt(x)) = 1
    Real w = integrate01([&](const Real& x) { return Real(1L, p) / (2L * sqrt(x)); }, p);
    CHECK(close(w, Real(1L, p), 290));
    // polynomial exactness-ish: int_0^1 x^3 = 1/4
    Real u = integrate01([&](const Real& x) { return x * x * x; }, p);
    CHECK(close(u, Real(Rational(1, 4), p), 300));
}
