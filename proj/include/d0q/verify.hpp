#ifndef D0Q_VERIFY_HPP
#define D0Q_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "d0q/eisenstein.hpp"
#include "d0q/families.hpp"
#include "d0q/periods.hpp"
#include "d0q/recognize.hpp"
#include "d0q/table1.hpp"
#include "d0q/zerolog.hpp"

namespace d0q {

class RouteMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ComputeRResult {
    Real R;          // direct q-average route (the returned value)
    Real R_series;   // g_k / h_k series route
    Real route_delta;
    long k0;
    TorsionCase kase;
    PeriodData pd;
};

// R = 2 pi D_{0,q}(z0) / Omega+ for the torsion point k*Pt, computed by two
// independent routes (direct q-average; q-expansion of g_{k0} or h_{k0}) that
// must agree to prec-64 bits.
inline ComputeRResult compute_R(int N, long k, const CurveModel& e, const CurvePoint& pt,
                                mpfr_prec_t prec) {
    CurvePoint pk = scalar_mul(e, k, pt);
    if (pk.is_infinity()) throw std::invalid_argument("compute_R: k*Pt is the identity");
    PeriodData pd = period_lattice(e, prec);
    TorsionIndex ti = torsion_parameters(e, pk, N, pd, prec);
    mpfr_prec_t wp = prec + 32;
    Real two_pi = 2L * Real::pi(wp);

    Real ang = two_pi * Real(Rational(ti.k0, N), wp);
    Complex z0(cos(ang), sin(ang));
    if (ti.kase == TorsionCase::B) z0 = z0 * q_frac_pow(pd.tau, Rational(1, 2), wp);
    QAverageResult qa = d0_q_average(z0, pd.q, prec);
    Real r_direct = two_pi * qa.value / pd.omega_plus;

    long denom = ti.kase == TorsionCase::A ? 1 : 2;
    long terms = series_terms_for(abs(pd.q), denom, N, prec);
    QExpansion qe = ti.kase == TorsionCase::A ? gk_expansion(N, static_cast<int>(ti.k0), terms)
                                              : hk_expansion(N, static_cast<int>(ti.k0), terms);
    // g = (1/i) D_{0,q} is purely imaginary: D_{0,q} = -Im g
    Complex g = eval_series(qe, pd.tau, prec);
    Real r_series = two_pi * (-g.im) / pd.omega_plus;

    Real delta = abs(r_direct - r_series);
    Real tol = Real::pow2(static_cast<long>(-(prec - 64)), wp) * (Real(1L, wp) + abs(r_direct));
    if (!(delta < tol))
        throw RouteMismatch("compute_R: q-average and series routes disagree by " + delta.str(8));
    return {r_direct, r_series, delta, ti.k0, ti.kase, pd};
}

struct VerificationReport {
    int N;
    int k;
    Rational t;
    long k0;
    TorsionCase kase;
    Real R;
    std::optional<Rational> recognized;
    Rational expected;
    bool match;
    bool insufficient_precision;
    Real residual;
    mpfr_prec_t precision;
    double wall_time; // seconds
};

namespace detail {

// Largest height bound H usable at tolerance 2^-(P/2): need 4 H^2 tol < 1.
inline Integer recognition_height_bound(mpfr_prec_t prec) {
    Integer cap("1000000000000");
    // 4 H^2 < 2^{P/2}  =>  H < 2^{P/4 - 1}
    long bits = static_cast<long>(prec) / 4 - 2;
    if (bits >= 41) return cap; // 2^41 > 10^12
    if (bits < 1) return Integer(1);
    Integer h = Integer(1) << static_cast<unsigned>(bits);
    return h < cap ? h : cap;
}

} // namespace detail

inline VerificationReport verify_instance(const TableRow& row, const Rational& t,
                                          mpfr_prec_t prec) {
    auto start = std::chrono::steady_clock::now();
    FamilyInstance fam = family_curve(row.N, t);
    ComputeRResult res = compute_R(row.N, row.k, fam.curve, fam.point, prec);
    Rational expected = expected_R(row, t);
    Real tol = Real::pow2(static_cast<long>(-prec / 2), res.R.prec());
    Real residual = abs(res.R - Real(expected, res.R.prec()));
    Integer hbound = detail::recognition_height_bound(prec);
    bool insufficient = hbound < height(expected) || prec < 128;
    std::optional<Recognition> rec;
    if (!insufficient) rec = recognize_rational(res.R, hbound, tol);
    bool match = !insufficient && residual <= tol && rec && rec->value == expected;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {row.N,    row.k,       t,
            res.k0,   res.kase,    res.R,
            rec ? std::optional<Rational>(rec->value) : std::nullopt,
            expected, match,       insufficient,
            residual, prec,        secs};
}

// Reports for the first `samples` admissible parameters, widening the search
// for even N until at least one case-B instance (point off the identity
// component of a two-component curve) is covered.
inline std::vector<VerificationReport> verify_row(int N, int k, int samples, mpfr_prec_t prec) {
    const TableRow& row = table_row(N, k);
    std::vector<VerificationReport> out;
    if (samples <= 0) return out;
    std::vector<Rational> ts = admissible_samples(N, samples);
    bool have_b = false;
    for (const auto& t : ts) {
        out.push_back(verify_instance(row, t, prec));
        if (out.back().kase == TorsionCase::B) have_b = true;
    }
    if (N % 2 == 0 && !have_b) {
        int scanned = 0;
        for (const auto& t : admissible_samples(N, samples + 48)) {
            if (std::find(ts.begin(), ts.end(), t) != ts.end()) continue;
            if (++scanned > 48) break;
            VerificationReport r = verify_instance(row, t, prec);
            if (r.kase == TorsionCase::B) {
                out.push_back(r);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return a.t < b.t;
    });
    return out;
}

struct VerificationSummary {
    std::vector<VerificationReport> reports;
    bool all_match;
    std::uint64_t checksum;
};

inline VerificationSummary run_all(mpfr_prec_t prec, int samples_per_row) {
    VerificationSummary s{{}, true, table_checksum()};
    for (const auto& row : table_rows()) {
        auto rs = verify_row(row.N, row.k, samples_per_row, prec);
        for (auto& r : rs) {
            if (!r.match && !r.insufficient_precision) s.all_match = false;
            s.reports.push_back(std::move(r));
        }
    }
    return s;
}

// ---- report serialization ----

inline std::string report_real(const Real& x) { return x.str(); }

inline std::string report_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"N\":" << r.N << ",\"k\":" << r.k << ",\"t\":\"" << to_string(r.t) << "\""
       << ",\"k0\":" << r.k0 << ",\"case\":\"" << torsion_case_name(r.kase) << "\""
       << ",\"R\":\"" << report_real(r.R) << "\""
       << ",\"recognized\":" << (r.recognized ? "\"" + to_string(*r.recognized) + "\"" : "null")
       << ",\"expected\":\"" << to_string(r.expected) << "\""
       << ",\"match\":" << (r.match ? "true" : "false")
       << ",\"insufficient_precision\":" << (r.insufficient_precision ? "true" : "false")
       << ",\"residual\":\"" << report_real(r.residual) << "\""
       << ",\"precision\":" << r.precision << ",\"wall_time\":" << r.wall_time << "}";
    return os.str();
}

inline std::string report_csv_header() {
    return "N,k,t,k0,case,R,recognized,expected,match,insufficient_precision,residual,precision,"
           "wall_time";
}

inline std::string report_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << r.N << ',' << r.k << ',' << to_string(r.t) << ',' << r.k0 << ','
       << torsion_case_name(r.kase) << ',' << report_real(r.R) << ','
       << (r.recognized ? to_string(*r.recognized) : std::string("none")) << ','
       << to_string(r.expected) << ',' << (r.match ? "true" : "false") << ','
       << (r.insufficient_precision ? "true" : "false") << ',' << report_real(r.residual) << ','
       << r.precision << ',' << r.wall_time;
    return os.str();
}

inline std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "N=" << r.N << " k=" << r.k << " t=" << to_string(r.t) << " [k0=" << r.k0 << " case "
       << torsion_case_name(r.kase) << "] R=" << r.R.str(30) << " expected="
       << to_string(r.expected) << " recognized="
       << (r.recognized ? to_string(*r.recognized) : std::string("none"))
       << " residual=" << r.residual.str(6) << (r.match ? " MATCH" : " MISMATCH")
       << (r.insufficient_precision ? " (insufficient precision)" : "");
    return os.str();
}

} // namespace d0q

#endif
