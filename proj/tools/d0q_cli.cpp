// Command-line front end: verify family rows against the rational table,
// dump exact q-expansions, compute periods, recognize rationals.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "d0q/d0q.hpp"

namespace {

using namespace d0q;

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                   bool all_match, std::uint64_t checksum) {
    if (format == "json") {
        std::cout << "{\"reports\":[";
        for (size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? "," : "") << report_json(reports[i]);
        std::cout << "],\"all_match\":" << (all_match ? "true" : "false")
                  << ",\"table_checksum\":\"" << std::hex << checksum << std::dec << "\"}\n";
    } else if (format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const auto& r : reports) std::cout << report_csv(r) << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
        std::printf("summary: %zu reports, all_match=%s, table_checksum=%llx\n", reports.size(),
                    all_match ? "true" : "false", static_cast<unsigned long long>(checksum));
    }
}

bool aggregate_match(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.match && !r.insufficient_precision) return false;
    return true;
}

int cmd_verify(int N, int k, const std::string& param, int samples, long prec,
               const std::string& format) {
    const TableRow& row = table_row(N, k);
    std::vector<VerificationReport> reports;
    if (!param.empty()) {
        reports.push_back(verify_instance(row, parse_rational(param), prec));
    } else {
        reports = verify_row(N, k, samples, prec);
    }
    bool ok = aggregate_match(reports);
    print_reports(reports, format, ok, table_checksum());
    return ok ? 0 : 1;
}

int cmd_verify_all(int samples, long prec, const std::string& format) {
    VerificationSummary s = run_all(prec, samples);
    print_reports(s.reports, format, s.all_match, s.checksum);
    return s.all_match ? 0 : 1;
}

int cmd_expand(const std::string& series, int N, int k, int a, int b, int ell,
               const std::string& twist, long terms) {
    QExpansion e{N, 1, {}};
    if (series == "gk") {
        e = gk_expansion(N, k, terms);
    } else if (series == "hk") {
        e = hk_expansion(N, k, terms);
    } else if (series == "alpha") {
        e = gab_expansion(HeckeIndex{N, a, b}, terms);
    } else if (series == "cusp0") {
        e = cusp0_expansion(N, ell, twist == "half" ? CuspTwist::half : CuspTwist::plain, terms);
    } else {
        throw std::invalid_argument("unknown series: " + series);
    }
    for (long n = 0; n <= e.n_max(); ++n)
        std::cout << n << "/" << e.denom << "\t" << e.coeffs[static_cast<size_t>(n)].str() << "\n";
    return 0;
}

int cmd_period(const std::string& a1, const std::string& a2, const std::string& a3,
               const std::string& a4, const std::string& a6, long prec) {
    CurveModel e{parse_rational(a1), parse_rational(a2), parse_rational(a3), parse_rational(a4),
                 parse_rational(a6)};
    PeriodData pd = period_lattice(e, prec);
    std::cout << "omega_plus = " << pd.omega_plus.str() << "\n"
              << "tau = " << pd.tau.str() << "\n"
              << "q = " << pd.q.str() << "\n"
              << "components = " << pd.components << "\n"
              << "path_delta = " << pd.path_delta.str(6) << "\n";
    return 0;
}

int cmd_recognize(const std::string& value, const std::string& max_height, const std::string& tol,
                  long prec) {
    Real x = Real::from_str(value, prec);
    Real t = Real::from_str(tol, prec);
    auto rec = recognize_rational(x, Integer(max_height), t);
    if (!rec) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << to_string(rec->value) << " residual=" << rec->residual.str(6)
              << " height=" << rec->height.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for rational q-average periods on torsion families"};
    app.require_subcommand(1);

    int N = 5, k = 1, a = 0, b = 1, ell = 1;
    int samples = 3;
    long prec = 384, terms = 20;
    std::string param, format = "text", series = "gk", twist = "plain";
    std::string value, max_height = "1000000000000", tol;
    std::string a1 = "0", a2 = "0", a3 = "0", a4 = "0", a6 = "0";

    auto* verify = app.add_subcommand("verify", "verify one table row");
    verify->add_option("--N", N)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--param", param, "single parameter value p/q (default: sampled)");
    verify->add_option("--samples", samples);
    verify->add_option("--prec-bits", prec);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* verify_all = app.add_subcommand("verify-all", "verify every table row");
    verify_all->add_option("--samples", samples);
    verify_all->add_option("--prec-bits", prec);
    verify_all->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* expand = app.add_subcommand("expand", "dump exact q-expansion coefficients");
    expand->add_option("--series", series)->check(CLI::IsMember({"gk", "hk", "alpha", "cusp0"}));
    expand->add_option("--N", N)->required();
    expand->add_option("--k", k);
    expand->add_option("--a", a);
    expand->add_option("--b", b);
    expand->add_option("--ell", ell);
    expand->add_option("--twist", twist)->check(CLI::IsMember({"plain", "half"}));
    expand->add_option("--terms", terms);

    auto* period = app.add_subcommand("period", "period lattice of a long Weierstrass model");
    period->add_option("--a1", a1)->required();
    period->add_option("--a2", a2)->required();
    period->add_option("--a3", a3)->required();
    period->add_option("--a4", a4)->required();
    period->add_option("--a6", a6)->required();
    period->add_option("--prec-bits", prec);

    auto* recognize = app.add_subcommand("recognize", "recognize a decimal as a small rational");
    recognize->add_option("--value", value)->required();
    recognize->add_option("--max-height", max_height);
    recognize->add_option("--tol", tol)->required();
    recognize->add_option("--prec-bits", prec);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(verify)) return cmd_verify(N, k, param, samples, prec, format);
        if (app.got_subcommand(verify_all)) return cmd_verify_all(samples, prec, format);
        if (app.got_subcommand(expand)) return cmd_expand(series, N, k, a, b, ell, twist, terms);
        if (app.got_subcommand(period)) return cmd_period(a1, a2, a3, a4, a6, prec);
        if (app.got_subcommand(recognize)) return cmd_recognize(value, max_height, tol, prec);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
