#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d0q/verify.hpp"

using namespace d0q;

TEST_CASE("table data is complete and self-consistent") {
    CHECK(table_rows().size() == 17);
    // rows present for every family level
    for (int N : family_levels()) CHECK_NOTHROW(table_row(N, 1));
    CHECK_THROWS_AS(table_row(5, 3), std::invalid_argument);
    // spot values of the 2NR polynomials
    CHECK(expected_R(table_row(5, 1), Rational(1)) == Rational(-2, 10));  // c - 3 at c=1
    CHECK(expected_R(table_row(5, 2), Rational(1)) == Rational(-4, 10));  // -3c - 1 at c=1
    CHECK(expected_R(table_row(4, 1), Rational(7)) == Rational(-1, 4));   // constant -2
    CHECK(expected_R(table_row(6, 1), Rational(-3)) == Rational(-1, 3));  // constant -4
    CHECK(expected_R(table_row(3, 1), Rational(2)) == Rational(-2, 6));   // -a1
    CHECK(expected_R(table_row(8, 1), Rational(2)) == Rational(-14, 32)); // (-8d+2)/d
    CHECK(expected_R(table_row(12, 1), Rational(2)) == Rational(-31, 12)); // (24*8-48*4+72-10)/(-1)/24
    CHECK_THROWS_AS(expected_R(table_row(8, 1), Rational(0)), std::domain_error);
}

TEST_CASE("table checksum is pinned") {
    // regenerate with table_checksum() if the table is deliberately edited
    CHECK(table_checksum() == 18440636604827078392ULL);
}

TEST_CASE("compute_R on 11a3: k=1 -> -1/5, k=2 -> -2/5") {
    mpfr_prec_t p = 448;
    FamilyInstance f = family_curve(5, Rational(1));
    ComputeRResult r1 = compute_R(5, 1, f.curve, f.point, p);
    CHECK(abs(r1.R - Real(Rational(-1, 5), p)) < Real::pow2(-330, p));
    ComputeRResult r2 = compute_R(5, 2, f.curve, f.point, p);
    CHECK(abs(r2.R - Real(Rational(-2, 5), p)) < Real::pow2(-330, p));
    CHECK(r1.route_delta < Real::pow2(-(p - 64), p));
}

TEST_CASE("R(kP) = -R((N-k)P)") {
    mpfr_prec_t p = 256;
    for (auto [N, t] : {std::pair<int, Rational>{5, Rational(2)}, {7, Rational(2)},
                        {6, Rational(1)}}) {
        FamilyInstance f = family_curve(N, t);
        for (int k = 1; k <= N / 2; ++k) {
            if (scalar_mul(f.curve, k, f.point).is_infinity()) continue;
            Real a = compute_R(N, k, f.curve, f.point, p).R;
            Real b = compute_R(N, N - k, f.curve, f.point, p).R;
            CHECK(abs(a + b) < Real::pow2(-(p - 48), p));
        }
    }
}

TEST_CASE("verify_instance produces a matching report") {
    VerificationReport r = verify_instance(table_row(6, 1), Rational(2), 320);
    CHECK(r.match);
    CHECK_FALSE(r.insufficient_precision);
    CHECK(r.expected == Rational(-1, 3));
    REQUIRE(r.recognized.has_value());
    CHECK(*r.recognized == Rational(-1, 3));
    CHECK(r.residual < Real::pow2(-160, 320));
    CHECK(r.wall_time > 0);
}

TEST_CASE("low precision flags insufficient-precision, not mismatch") {
    VerificationReport r = verify_instance(table_row(4, 1), Rational(1), 64);
    CHECK(r.insufficient_precision);
    CHECK_FALSE(r.match);
    // run_all does not count it as a failure
    // (exercised indirectly: summary with 0 samples is trivially all_match)
    VerificationSummary empty = run_all(256, 0);
    CHECK(empty.reports.empty());
    CHECK(empty.all_match);
}

TEST_CASE("verify_row covers case B for even N") {
    auto reports = verify_row(4, 1, 3, 256);
    CHECK(reports.size() >= 3);
    bool has_b = false;
    for (const auto& r : reports) {
        CHECK(r.match);
        if (r.kase == TorsionCase::B) has_b = true;
    }
    CHECK(has_b);
}

TEST_CASE("report serialization") {
    VerificationReport r = verify_instance(table_row(5, 1), Rational(1), 256);
    std::string j = report_json(r);
    CHECK(j.find("\"N\":5") != std::string::npos);
    CHECK(j.find("\"expected\":\"-1/5\"") != std::string::npos);
    CHECK(j.find("\"match\":true") != std::string::npos);
    std::string c = report_csv(r);
    CHECK(c.find("-1/5") != std::string::npos);
    std::string t = report_text(r);
    CHECK(t.find("MATCH") != std::string::npos);
    CHECK(report_csv_header().find("residual") != std::string::npos);
}
