#include "omu/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "omu/convolution.hpp"
#include "omu/generalized.hpp"
#include "omu/multinomial.hpp"
#include "omu/scan.hpp"

namespace omu {

namespace {

using nlohmann::json;

constexpr int kFloatDigits = 25;

std::string float_str(const BigFloat& x) { return x.str(kFloatDigits); }

struct Range {
    long lo = 0;
    long hi = 0;
    bool empty() const { return lo > hi; }
};

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            const long v = std::stol(text);
            return Range{v, v};
        }
        return Range{std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected <n> or <lo>..<hi>, got '" + text + "'");
    }
}

json make_record(const std::string& command, json parameters, json results) {
    json record;
    record["command"] = command;
    record["parameters"] = std::move(parameters);
    record["results"] = std::move(results);
    record["float_precision_digits"] = kFloatDigits;
    record["working_precision_bits"] = static_cast<long>(BigFloat::precision_bits);
    return record;
}

void emit_json(std::ostream& out, json record, double elapsed_ms) {
    record["elapsed_ms"] = elapsed_ms;
    out << record.dump(2) << "\n";
}

std::string kind_str(ModeKind kind) { return kind == ModeKind::peak ? "peak" : "plateau"; }

// c_{q,L} in the table form binom(L,k)_q / (q+1)^L
std::string unreduced_cmax(int q, long L, const BigInt& numerator) {
    return numerator.get_str() + "/" + pow_int(BigInt(q + 1), static_cast<unsigned long>(L)).get_str();
}

json identity_json(const IdentityReport& report) {
    json j;
    j["name"] = report.name;
    j["pass"] = report.pass;
    j["exact"] = report.exact;
    j["terms_used"] = report.terms_used;
    j["detail"] = report.detail;
    if (!report.exact) {
        j["tolerance"] = report.tolerance;
        j["lhs"] = float_str(report.lhs);
        j["rhs"] = float_str(report.rhs);
        j["difference"] = float_str(report.difference);
    }
    return j;
}

void identity_plain(std::ostream& out, const IdentityReport& report) {
    out << (report.pass ? "[PASS] " : "[FAIL] ") << report.name;
    if (report.exact) {
        out << " (exact, terms " << report.terms_used << ")";
    } else {
        out << " (lhs " << report.lhs.str(16) << ", rhs " << report.rhs.str(16) << ", |diff| "
            << report.difference.str(6) << ", tol " << report.tolerance << ", terms "
            << report.terms_used << ")";
    }
    out << "\n  " << report.detail << "\n";
}

struct TriangleOptions {
    int q = 1;
    long rows = 5;
    std::string format = "plain";
};

int cmd_triangle(const TriangleOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    json rows_json = json::array();
    std::ostringstream plain, csv;
    csv << "q,L,k,coeff,is_mode\n";
    for (long L = 0; L <= opt.rows; ++L) {
        const TriangleRow row = expand_row(opt.q, L);
        const ModeResult mode = modes(row);
        if (opt.format == "json") {
            json coeffs = json::array();
            for (const BigInt& c : row.coeffs) coeffs.push_back(c.get_str());
            rows_json.push_back({{"L", L},
                                 {"coeffs", std::move(coeffs)},
                                 {"mode_lo", mode.lo},
                                 {"mode_hi", mode.hi},
                                 {"kind", kind_str(mode.kind)},
                                 {"max", mode.max_value.get_str()}});
        } else if (opt.format == "csv") {
            for (long k = 0; k < static_cast<long>(row.coeffs.size()); ++k)
                csv << opt.q << "," << L << "," << k << "," << row.coeffs[k].get_str() << ","
                    << (mode.contains(k) ? 1 : 0) << "\n";
        } else {
            plain << "L=" << L << ":";
            for (long k = 0; k < static_cast<long>(row.coeffs.size()); ++k) {
                if (mode.contains(k))
                    plain << " [" << row.coeffs[k].get_str() << "]";
                else
                    plain << " " << row.coeffs[k].get_str();
            }
            plain << "\n";
        }
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        emit_json(out,
                  make_record("triangle", {{"q", opt.q}, {"rows", opt.rows}},
                              {{"rows", std::move(rows_json)}}),
                  ms);
    } else if (opt.format == "csv") {
        out << csv.str();
    } else {
        out << plain.str();
        out << "elapsed_ms: " << ms << "\n";
    }
    return 0;
}

struct PointOptions {
    int q = 1;
    long L = 0;
    std::string format = "plain";
};

int cmd_mode(const PointOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ModeResult mode = modes(opt.q, opt.L);
    const long formula = mode_formula(opt.q, opt.L);
    const bool member = mode.contains(formula);
    const bool recurrence = opt.L >= 1 ? verify_mode_recurrence(opt.q, opt.L) : true;
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        json results = {{"mode_lo", mode.lo},
                        {"mode_hi", mode.hi},
                        {"kind", kind_str(mode.kind)},
                        {"max_value", mode.max_value.get_str()},
                        {"mode_formula", formula},
                        {"formula_is_mode", member},
                        {"recurrence_holds", recurrence}};
        emit_json(out, make_record("mode", {{"q", opt.q}, {"L", opt.L}}, std::move(results)), ms);
    } else {
        out << kind_str(mode.kind) << " ";
        if (mode.kind == ModeKind::peak)
            out << mode.lo;
        else
            out << "{" << mode.lo << ".." << mode.hi << "}";
        out << " max " << mode.max_value.get_str() << " formula " << formula
            << (member ? " (member)" : " (NOT A MODE)") << " recurrence "
            << (recurrence ? "holds" : "FAILS") << "\n";
    }
    return (member && recurrence) ? 0 : 1;
}

int cmd_cmax(const PointOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const MaxProb c = max_prob(opt.q, opt.L);
    const BigInt numerator = multinomial(opt.q, opt.L, c.arg);
    json results = {{"value", unreduced_cmax(opt.q, opt.L, numerator)},
                    {"value_reduced", rational_str(c.value)},
                    {"arg", c.arg}};
    bool holds = true;
    std::ostringstream bound_plain;
    if (opt.L >= 1) {
        const BoundCheck bc = check_mattner_roos(opt.q, opt.L);
        holds = bc.holds;
        results["mattner_roos"] = {{"bound", float_str(bc.bound)},
                                   {"value", float_str(bc.value)},
                                   {"slack", float_str(bc.slack)},
                                   {"holds", bc.holds}};
        bound_plain << " bound " << bc.bound.str(12) << (bc.holds ? " holds" : " VIOLATED")
                    << " slack " << bc.slack.str(6);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        emit_json(out, make_record("cmax", {{"q", opt.q}, {"L", opt.L}}, std::move(results)), ms);
    } else {
        out << unreduced_cmax(opt.q, opt.L, numerator) << " = " << rational_str(c.value) << " at k="
            << c.arg << bound_plain.str() << "\n";
    }
    return holds ? 0 : 1;
}

int cmd_pmf(const PointOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const TriangleRow row = expand_row(opt.q, opt.L);
    const PmfTable table = pmf(opt.q, opt.L);
    const std::string denom = pow_int(BigInt(opt.q + 1), static_cast<unsigned long>(opt.L)).get_str();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        json probs = json::array();
        for (long k = 0; k < static_cast<long>(table.probs.size()); ++k)
            probs.push_back({{"k", k},
                             {"prob", row.coeffs[k].get_str() + "/" + denom},
                             {"prob_reduced", rational_str(table.probs[k])}});
        emit_json(out, make_record("pmf", {{"q", opt.q}, {"L", opt.L}}, {{"probs", std::move(probs)}}),
                  ms);
    } else if (opt.format == "csv") {
        out << "k,num,den,prob_reduced\n";
        for (long k = 0; k < static_cast<long>(table.probs.size()); ++k)
            out << k << "," << row.coeffs[k].get_str() << "," << denom << ","
                << rational_str(table.probs[k]) << "\n";
    } else {
        for (long k = 0; k < static_cast<long>(table.probs.size()); ++k)
            out << "P(S=" << k << ") = " << row.coeffs[k].get_str() << "/" << denom << "\n";
    }
    return 0;
}

struct ScanOptions {
    std::string q_range = "1..8";
    std::string L_range = "1..40";
    std::vector<std::string> checks{"slc", "symmetry", "mode", "mattner-roos"};
    int jobs = 0;
    bool serial = false;
    std::string format = "plain";
};

int cmd_scan(const ScanOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Range qr = parse_range(opt.q_range);
    const Range lr = parse_range(opt.L_range);
    std::vector<Check> checks;
    for (const std::string& name : opt.checks) checks.push_back(parse_check(name));

    ScanReport report;
    if (!qr.empty() && !lr.empty()) {
        report = opt.serial
                     ? scan_grid_serial(static_cast<int>(qr.lo), static_cast<int>(qr.hi), lr.lo,
                                        lr.hi, checks)
                     : scan_grid(static_cast<int>(qr.lo), static_cast<int>(qr.hi), lr.lo, lr.hi,
                                 checks, opt.jobs);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.format == "json") {
        json violations = json::array();
        for (const Violation& v : report.violations)
            violations.push_back(
                {{"q", v.q}, {"L", v.L}, {"check", check_name(v.check)}, {"detail", v.detail}});
        json results = {{"cells", report.cells},
                        {"violation_count", report.violations.size()},
                        {"violations", std::move(violations)}};
        if (report.has_min_slack)
            results["min_slack"] = {{"value", float_str(report.min_slack)},
                                    {"q", report.min_slack_q},
                                    {"L", report.min_slack_L}};
        json params = {{"q", opt.q_range}, {"L", opt.L_range}, {"checks", opt.checks},
                       {"jobs", opt.jobs}, {"serial", opt.serial}};
        emit_json(out, make_record("scan", std::move(params), std::move(results)), ms);
    } else {
        for (const Violation& v : report.violations)
            out << "violation q=" << v.q << " L=" << v.L << " [" << check_name(v.check) << "] "
                << v.detail << "\n";
        out << "checked " << report.cells << " cells: " << report.violations.size()
            << " violations\n";
        if (report.has_min_slack)
            out << "min mattner-roos slack " << report.min_slack.str(12) << " at q="
                << report.min_slack_q << " L=" << report.min_slack_L << "\n";
        out << "elapsed_ms: " << ms << "\n";
    }
    return report.violations.empty() ? 0 : 1;
}

struct VerifyOptions {
    std::string name;
    int order = 100;
    int terms = 200;
    double tol = 1e-8;
    int depth = 20;
    std::string t0 = "0.5";
    std::string z = "1/2";
    int q = 4;
    std::string format = "plain";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<IdentityReport> reports;
    if (opt.name == "g2") {
        reports.push_back(verify_g2_closed_form(opt.order));
    } else if (opt.name == "g4") {
        reports.push_back(verify_g4_closed_form(parse_rational(opt.t0), opt.terms, opt.tol));
    } else if (opt.name == "corollary-sums") {
        auto pair = verify_corollary_sums(opt.terms, opt.tol, opt.terms, opt.tol, opt.depth);
        reports.push_back(std::move(pair.first));
        reports.push_back(std::move(pair.second));
    } else if (opt.name == "c4n-reconstruction" || opt.name == "c4n") {
        reports.push_back(verify_c4n_reconstruction(parse_rational(opt.t0), opt.terms, opt.tol));
    } else if (opt.name == "gf") {
        reports.push_back(verify_gf_equality(parse_rational(opt.z), opt.q, opt.order));
    } else if (opt.name == "lemma") {
        reports.push_back(verify_lemma_equality(parse_rational(opt.z), opt.q, opt.order));
    } else if (opt.name == "lagrange") {
        reports.push_back(verify_lagrange(parse_rational(opt.z), opt.q, opt.order));
    } else {
        throw std::invalid_argument("unknown identity: " + opt.name);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    bool all_pass = true;
    for (const IdentityReport& r : reports) all_pass = all_pass && r.pass;
    if (opt.format == "json") {
        json arr = json::array();
        for (const IdentityReport& r : reports) arr.push_back(identity_json(r));
        json params = {{"identity", opt.name}, {"order", opt.order}, {"terms", opt.terms},
                       {"tol", opt.tol},       {"depth", opt.depth}, {"t0", opt.t0},
                       {"z", opt.z},           {"q", opt.q}};
        emit_json(out,
                  make_record("verify", std::move(params),
                              {{"reports", std::move(arr)}, {"all_pass", all_pass}}),
                  ms);
    } else {
        for (const IdentityReport& r : reports) identity_plain(out, r);
        out << "elapsed_ms: " << ms << "\n";
    }
    return all_pass ? 0 : 1;
}

struct SeriesOptions {
    std::string kind = "gf";
    std::string z = "1/2";
    int q = 4;
    int order = 100;
    std::string format = "plain";
};

int cmd_series(const SeriesOptions& opt, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    json entries = json::array();
    std::ostringstream plain, csv;
    if (opt.kind == "gf" || opt.kind == "lagrange") {
        const Rational z = parse_rational(opt.z);
        const auto coeffs = opt.kind == "gf" ? gen_multinomial_series(z, opt.q, opt.order)
                                             : lagrange_sequence(z, opt.q, opt.order);
        csv << "n,coefficient\n";
        for (size_t n = 0; n < coeffs.size(); ++n) {
            entries.push_back({{"n", n}, {"coefficient", rational_str(coeffs[n])}});
            plain << "a_" << n << " = " << rational_str(coeffs[n]) << "\n";
            csv << n << "," << rational_str(coeffs[n]) << "\n";
        }
    } else if (opt.kind == "gq") {
        const auto coeffs = g_q_series(opt.q, opt.order);
        csv << "n,coefficient,exponent,value\n";
        for (size_t n = 0; n < coeffs.size(); ++n) {
            entries.push_back({{"n", n},
                               {"coefficient", rational_str(coeffs[n].coefficient)},
                               {"exponent", rational_str(coeffs[n].exponent)},
                               {"value", float_str(coeffs[n].value)}});
            plain << "c_" << n << " = " << rational_str(coeffs[n].coefficient) << " / "
                  << (opt.q + 1) << "^" << rational_str(coeffs[n].exponent) << " = "
                  << coeffs[n].value.str(16) << "\n";
            csv << n << "," << rational_str(coeffs[n].coefficient) << ","
                << rational_str(coeffs[n].exponent) << "," << float_str(coeffs[n].value) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown series kind: " + opt.kind);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        json params = {{"kind", opt.kind}, {"z", opt.z}, {"q", opt.q}, {"order", opt.order}};
        emit_json(out, make_record("series", std::move(params), {{"coefficients", std::move(entries)}}),
                  ms);
    } else if (opt.format == "csv") {
        out << csv.str();
    } else {
        out << plain.str();
        out << "elapsed_ms: " << ms << "\n";
    }
    return 0;
}

void add_format_option(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact ordinary multinomials, uniform-convolution maxima and"
                 " generating-function identity checks"};
    app.require_subcommand(1);

    TriangleOptions tri;
    auto* tri_cmd = app.add_subcommand("triangle", "coefficient triangle rows 0..L with modes marked");
    tri_cmd->add_option("--q", tri.q, "polynomial degree bound q >= 1")->required();
    tri_cmd->add_option("--rows", tri.rows, "largest row L")->required();
    add_format_option(tri_cmd, tri.format);

    PointOptions mode_opt;
    auto* mode_cmd = app.add_subcommand("mode", "argmax set, closed-form mode and mode recurrence");
    mode_cmd->add_option("--q", mode_opt.q)->required();
    mode_cmd->add_option("--L", mode_opt.L)->required();
    add_format_option(mode_cmd, mode_opt.format);

    PointOptions cmax_opt;
    auto* cmax_cmd = app.add_subcommand("cmax", "maximal probability c_{q,L} with the literature bound");
    cmax_cmd->add_option("--q", cmax_opt.q)->required();
    cmax_cmd->add_option("--L", cmax_opt.L)->required();
    add_format_option(cmax_cmd, cmax_opt.format);

    PointOptions pmf_opt;
    auto* pmf_cmd = app.add_subcommand("pmf", "exact pmf of the L-fold sum of uniforms on {0..q}");
    pmf_cmd->add_option("--q", pmf_opt.q)->required();
    pmf_cmd->add_option("--L", pmf_opt.L)->required();
    add_format_option(pmf_cmd, pmf_opt.format);

    ScanOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan", "property scans over a (q, L) grid");
    scan_cmd->add_option("--q", scan_opt.q_range, "q range as <n> or <lo>..<hi>")->capture_default_str();
    scan_cmd->add_option("--L", scan_opt.L_range, "L range as <n> or <lo>..<hi>")->capture_default_str();
    scan_cmd->add_option("--check", scan_opt.checks,
                         "checks: slc symmetry unimodal mode normalization cmax-formula mattner-roos monotone")
        ->delimiter(',')
        ->capture_default_str();
    scan_cmd->add_option("--jobs", scan_opt.jobs, "worker threads (0 = default)")->capture_default_str();
    scan_cmd->add_flag("--serial", scan_opt.serial, "use the single-threaded reference scan");
    add_format_option(scan_cmd, scan_opt.format);

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "generating-function identity checks");
    verify_cmd
        ->add_option("identity", verify_opt.name,
                     "one of: g2 g4 corollary-sums c4n-reconstruction gf lemma lagrange")
        ->required();
    verify_cmd->add_option("--order", verify_opt.order, "series/check order")->capture_default_str();
    verify_cmd->add_option("--terms", verify_opt.terms, "partial-sum terms")->capture_default_str();
    verify_cmd->add_option("--tol", verify_opt.tol, "numeric tolerance")->capture_default_str();
    verify_cmd->add_option("--depth", verify_opt.depth, "acceleration depth")->capture_default_str();
    verify_cmd->add_option("--t0", verify_opt.t0, "evaluation point (rational)")->capture_default_str();
    verify_cmd->add_option("--z", verify_opt.z, "upper argument z (rational)")->capture_default_str();
    verify_cmd->add_option("--q", verify_opt.q)->capture_default_str();
    add_format_option(verify_cmd, verify_opt.format);

    SeriesOptions series_opt;
    auto* series_cmd = app.add_subcommand("series", "raw series coefficients");
    series_cmd->add_option("--kind", series_opt.kind, "gf | lagrange | gq")->capture_default_str();
    series_cmd->add_option("--z", series_opt.z, "exponent z (rational), for gf/lagrange")
        ->capture_default_str();
    series_cmd->add_option("--q", series_opt.q)->capture_default_str();
    series_cmd->add_option("--order", series_opt.order)->capture_default_str();
    add_format_option(series_cmd, series_opt.format);

    std::vector<std::string> argv_store = args;
    std::vector<char*> argv;
    static char program_name[] = "omu";
    argv.push_back(program_name);
    for (std::string& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (app.got_subcommand(tri_cmd)) return cmd_triangle(tri, out);
        if (app.got_subcommand(mode_cmd)) return cmd_mode(mode_opt, out);
        if (app.got_subcommand(cmax_cmd)) return cmd_cmax(cmax_opt, out);
        if (app.got_subcommand(pmf_cmd)) return cmd_pmf(pmf_opt, out);
        if (app.got_subcommand(scan_cmd)) return cmd_scan(scan_opt, out);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_opt, out);
        if (app.got_subcommand(series_cmd)) return cmd_series(series_opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace omu
