// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "d0q/d0q.hpp"

using namespace d0q;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. verify-all at 384 bits, >= 3 samples per row, 17 rows, residual < 1e-80,
//    under 10 minutes
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    mpfr_prec_t p = 384;
    VerificationSummary s = run_all(p, 3);
    bool ok = s.all_match;
    Real bound = Real::from_str("1e-80", p);
    int rows_seen = 0;
    {
        std::vector<std::pair<int, int>> seen;
        for (const auto& r : s.reports) {
            if (!r.match) ok = false;
            if (!r.recognized || *r.recognized != r.expected) ok = false;
            if (!(r.residual < bound)) ok = false;
            std::pair<int, int> key{r.N, r.k};
            bool dup = false;
            for (auto& kk : seen) dup = dup || kk == key;
            if (!dup) seen.push_back(key);
        }
        rows_seen = static_cast<int>(seen.size());
    }
    if (rows_seen != 17) ok = false;
    double secs = seconds_since(t0);
    if (secs > 600) ok = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu reports, %d rows, %.1f s, checksum %llx",
                  s.reports.size(), rows_seen, secs,
                  static_cast<unsigned long long>(s.checksum));
    report(1, "table reproduction at 384 bits", ok, buf);
}

// 2. 11a3 spot check at 448 bits: k=1 -> -1/5, k=2 -> -2/5, residual < 1e-95,
//    under 30 seconds
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    mpfr_prec_t p = 448;
    FamilyInstance f = family_curve(5, Rational(1));
    Real bound = Real::from_str("1e-95", p);
    Real r1 = abs(compute_R(5, 1, f.curve, f.point, p).R - Real(Rational(-1, 5), p));
    Real r2 = abs(compute_R(5, 2, f.curve, f.point, p).R - Real(Rational(-2, 5), p));
    double secs = seconds_since(t0);
    bool ok = r1 < bound && r2 < bound && secs < 30;
    char buf[160];
    std::snprintf(buf, sizeof buf, "residuals %s / %s, %.2f s", r1.str(4).c_str(),
                  r2.str(4).c_str(), secs);
    report(2, "100-digit spot check on 11a3", ok, buf);
}

// 3. exact identities for all N in {3..10,12}, all valid k/ell, n <= 50N
void criterion3() {
    bool ok = true;
    for (int N : family_levels()) {
        for (long n = 0; n <= 50L * N && ok; ++n) {
            std::vector<std::vector<CycloElem>> t(N, std::vector<CycloElem>(N, CycloElem(N)));
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    if (a || b) t[a][b] = alpha_coeff({N, a, b}, n);
            auto shifted_sum = [&](auto shift, auto sign) {
                CycloElem sum(N);
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b) {
                        if (a == 0 && b == 0) continue;
                        int rot = static_cast<int>(((shift(a, b) % N) + N) % N);
                        int sg = sign(a, b);
                        for (int i = 0; i < N; ++i) {
                            const Rational& c = t[a][b][i];
                            if (c == 0) continue;
                            if (sg > 0)
                                sum[(i + rot) % N] += c;
                            else
                                sum[(i + rot) % N] -= c;
                        }
                    }
                return sum;
            };
            for (int k = 1; k < N && ok; ++k) {
                CycloElem g = shifted_sum([&](int a, int) { return k * a; },
                                          [](int, int) { return 1; });
                CycloElem ge = (n % N == 0) ? gk_coeff(N, k, n / N) : CycloElem(N);
                if (!(g == ge)) ok = false;
                if (N % 2 == 0) {
                    CycloElem h = shifted_sum([&](int a, int) { return k * a; },
                                              [](int, int b) { return b % 2 ? -1 : 1; });
                    CycloElem he(N);
                    if ((2 * n) % N == 0) he = hk_coeff(N, k, 2 * n / N);
                    if (!(h == he)) ok = false;
                }
            }
            for (int ell = 1; ell < N && ok; ++ell) {
                if (gcd(Integer(ell), Integer(N)) != 1) continue;
                CycloElem plain = shifted_sum([&](int, int b) { return -ell * b; },
                                              [](int, int) { return 1; });
                if (!(plain == CycloElem(N, gprime_cusp0_coeff(N, ell, CuspTwist::plain, n))))
                    ok = false;
                if (N % 2 == 0) {
                    CycloElem half = shifted_sum([&](int, int b) { return -ell * b; },
                                                 [](int a, int) { return a % 2 ? -1 : 1; });
                    if (!(half == CycloElem(N, gprime_cusp0_coeff(N, ell, CuspTwist::half, n))))
                        ok = false;
                }
            }
        }
    }
    report(3, "exact coefficient identities", ok);
}

// 4. series/average bridge < 2^-320 at 384 bits, >= 20 configurations with
//    >= 3 case-B instances
void criterion4() {
    mpfr_prec_t p = 384;
    Real bound = Real::pow2(-320, p);
    int configs = 0, case_b = 0;
    bool ok = true;
    auto check_a = [&](int N, int k, const Rational& im_tau) {
        Complex tau(Real(0L, p), Real(im_tau, p));
        Real q = exp(-(2L * Real::pi(p) * tau.im));
        Complex gv = eval_series(gk_expansion(N, k, series_terms_for(q, 1, N, p)), tau, p);
        Real ang = 2L * Real::pi(p) * Real(Rational(k, N), p);
        Real direct = d0_q_average(Complex(cos(ang), sin(ang)), q, p).value;
        // (1/i) D = -i D: compare to gv (purely imaginary)
        Real diff = abs(gv.im + direct) + abs(gv.re);
        if (!(diff < bound)) ok = false;
        ++configs;
    };
    auto check_b = [&](int N, int k, const Rational& im_tau) {
        Complex tau(Real(0L, p), Real(im_tau, p));
        Real q = exp(-(2L * Real::pi(p) * tau.im));
        Complex hv = eval_series(hk_expansion(N, k, series_terms_for(q, 2, N, p)), tau, p);
        Real ang = 2L * Real::pi(p) * Real(Rational(k, N), p);
        Complex z = Complex(cos(ang), sin(ang)) * Complex(sqrt(q));
        Real direct = d0_q_average(z, q, p).value;
        Real diff = abs(hv.im + direct) + abs(hv.re);
        if (!(diff < bound)) ok = false;
        ++configs;
        ++case_b;
    };
    for (int N : {3, 5, 7, 9})
        for (int k = 1; k < N; k += 2) check_a(N, k, Rational(3, 4));
    for (int N : {4, 6, 8, 10, 12}) check_a(N, 1, Rational(4, 5));
    check_b(4, 1, Rational(3, 4));
    check_b(6, 1, Rational(4, 5));
    check_b(8, 3, Rational(7, 8));
    check_b(10, 1, Rational(1, 1));
    check_b(12, 5, Rational(5, 6));
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d configurations, %d case B", configs, case_b);
    report(4, "series/average bridge", ok && configs >= 20 && case_b >= 3, buf);
}

// 5. Lang route agreement to 2^-320 at 384 bits
void criterion5() {
    mpfr_prec_t p = 384;
    Real bound = Real::pow2(-320, p);
    bool ok = true;
    for (int N : {5, 6, 8, 12}) {
        Complex tau(Real(0L, p), Real(Rational(4, 5), p));
        Complex q = q_frac_pow(tau, Rational(1), p);
        for (int k = 1; k < N; ++k) {
            Real ang = 2L * Real::pi(p) * Real(Rational(k, N), p);
            Complex w(cos(ang), sin(ang));
            Complex lhs = lang_F(q, w, p);
            Complex rhs =
                eval_series(gk_expansion(N, k, series_terms_for(abs(q), 1, N, p)), tau, p);
            if (!(abs(lhs - rhs) < bound)) ok = false;
        }
        if (N % 2 == 0) {
            for (int k = 0; k < N; ++k) {
                Real ang = 2L * Real::pi(p) * Real(Rational(k, N), p);
                Complex w = Complex(cos(ang), sin(ang)) * q_frac_pow(tau, Rational(1, 2), p);
                Complex lhs = Complex(Real(Rational(1, 2), p)) + lang_F(q, w, p);
                Complex rhs =
                    eval_series(hk_expansion(N, k, series_terms_for(abs(q), 2, N, p)), tau, p);
                if (!(abs(lhs - rhs) < bound)) ok = false;
            }
        }
    }
    report(5, "Lang route agreement", ok);
}

// 6. dual-path periods to P-32 bits and torsion matching separation on all
//    family samples
void criterion6() {
    mpfr_prec_t p = 384;
    bool ok = true;
    int instances = 0;
    for (int N : family_levels()) {
        for (const Rational& t : admissible_samples(N, 3)) {
            FamilyInstance f = family_curve(N, t);
            PeriodData pd = period_lattice(f.curve, p); // throws if paths disagree
            if (!(pd.path_delta < Real::pow2(-(p - 32), p))) ok = false;
            TorsionIndex ti = torsion_parameters(f.curve, f.point, N, pd, p);
            CurveInvariants inv = invariants(f.curve);
            Real scale = Real(1L, p) + abs(Real(f.point.x() + inv.b2 / 12, p)) +
                         abs(Real(2 * f.point.y() + f.curve.a1 * f.point.x() + f.curve.a3, p));
            if (!(ti.residual < Real::pow2(-(p - 48), p) * scale)) ok = false;
            if (!(ti.runner_up > Real::pow2(-p / 2, p))) ok = false;
            ++instances;
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "%d instances", instances);
    report(6, "period cross-validation and torsion matching", ok, buf);
}

// 7. property suites
void criterion7() {
    mpfr_prec_t p = 256;
    bool ok = true;
    // D0 symmetries
    for (int j = 1; j < 10; ++j) {
        Real ang = 2L * Real::pi(p) * Real(Rational(j, 23), p);
        Complex z = Complex(cos(ang), sin(ang)) * Complex(Real(Rational(5, 7), p));
        if (!(abs(d0(conj(z)) + d0(z)) < Real::pow2(-(p - 16), p))) ok = false;
        if (!(abs(d0(Complex(1L, p) / z) - d0(conj(z))) < Real::pow2(-(p - 16), p))) ok = false;
    }
    // exact antisymmetry
    for (int N : family_levels())
        for (int k = 1; k < N; ++k)
            for (long n = 0; n <= 40; ++n)
                if (!(gk_coeff(N, N - k, n) == -gk_coeff(N, k, n))) ok = false;
    // ring axioms on random elements
    {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<int> coeff(-5, 5);
        for (int N : {7, 12}) {
            for (int trial = 0; trial < 20; ++trial) {
                CycloElem a(N), b(N), c(N);
                for (int i = 0; i < N; ++i) {
                    a[i] = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
                    b[i] = Rational(coeff(rng));
                    c[i] = Rational(coeff(rng), 3);
                }
                if (!((a * b) == (b * a))) ok = false;
                if (!(((a * b) * c) == (a * (b * c)))) ok = false;
                if (!((a * (b + c)) == (a * b + a * c))) ok = false;
            }
        }
    }
    // recognition round trip, 1000 trials
    {
        std::mt19937_64 rng(55555);
        std::uniform_int_distribution<long> num(-1000000, 1000000);
        std::uniform_int_distribution<long> den(1, 1000000);
        Real tol = Real::pow2(-70, p);
        for (int trial = 0; trial < 1000; ++trial) {
            Rational target(num(rng), den(rng));
            if (height(target) > 1000000) continue;
            Real x(target, p);
            x += Real::pow2(-90, p);
            auto r = recognize_rational(x, Integer(1000000), tol);
            if (!r || r->value != target) ok = false;
        }
    }
    report(7, "property suites", ok);
}

} // namespace

int main() {
    criterion3(); // cheap exact suites first
    criterion7();
    criterion2();
    criterion4();
    criterion5();
    criterion6();
    criterion1();
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return failures ? 1 : 0;
}
