#include "omu/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "omu/convolution.hpp"
#include "omu/multinomial.hpp"

namespace omu {

std::string check_name(Check check) {
    switch (check) {
        case Check::slc: return "slc";
        case Check::symmetry: return "symmetry";
        case Check::unimodal: return "unimodal";
        case Check::mode: return "mode";
        case Check::normalization: return "normalization";
        case Check::cmax_formula: return "cmax-formula";
        case Check::mattner_roos: return "mattner-roos";
        case Check::monotone: return "monotone";
    }
    return "unknown";
}

Check parse_check(const std::string& name) {
    for (Check c : all_checks())
        if (check_name(c) == name) return c;
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<Check> all_checks() {
    return {Check::slc,           Check::symmetry, Check::unimodal,     Check::mode,
            Check::normalization, Check::cmax_formula, Check::mattner_roos, Check::monotone};
}

namespace {

struct CellResult {
    std::vector<Violation> violations;
    std::optional<BigFloat> slack;
};

bool wants(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

CellResult check_cell(int q, long L, const std::vector<Check>& checks) {
    CellResult result;
    const TriangleRow row = expand_row(q, L);
    const long m = row.support();
    const auto report = [&](Check c, const std::string& detail) {
        result.violations.push_back(Violation{q, L, c, detail});
    };

    if (wants(checks, Check::slc)) {
        for (long l : slc_violations(row.coeffs)) {
            std::ostringstream os;
            os << "a[" << l << "]^2 <= a[" << l - 1 << "] a[" << l + 1 << "] (a[" << l
               << "] = " << row.coeffs[l].get_str() << ")";
            report(Check::slc, os.str());
        }
    }
    if (wants(checks, Check::symmetry)) {
        for (long k = 0; k <= m / 2; ++k) {
            if (row.coeffs[k] != row.coeffs[m - k]) {
                report(Check::symmetry, "coeffs[" + std::to_string(k) + "] != coeffs[" +
                                            std::to_string(m - k) + "]");
                break;
            }
        }
    }
    if (wants(checks, Check::unimodal)) {
        if (!is_unimodal(row.coeffs)) report(Check::unimodal, "row is not unimodal");
    }
    if (wants(checks, Check::mode)) {
        const ModeResult mode = modes(row);
        const long formula = mode_formula(q, L);
        if (!mode.contains(formula))
            report(Check::mode, "formula index " + std::to_string(formula) + " not in argmax set");
        const bool odd_support = (m % 2 != 0);
        if (!odd_support && !(mode.lo == m / 2 && mode.hi == m / 2))
            report(Check::mode, "even qL but argmax set is not {qL/2}");
        if (odd_support && !(mode.lo == (m - 1) / 2 && mode.hi == (m + 1) / 2))
            report(Check::mode, "odd qL but argmax set is not {(qL-1)/2, (qL+1)/2}");
    }
    if (wants(checks, Check::normalization)) {
        BigInt sum(0);
        for (const BigInt& c : row.coeffs) sum += c;
        if (sum != pow_int(BigInt(q + 1), static_cast<unsigned long>(L)))
            report(Check::normalization, "row sum != (q+1)^L");
    }
    if (wants(checks, Check::cmax_formula)) {
        BigInt max_coeff = row.coeffs[0];
        for (const BigInt& c : row.coeffs)
            if (c > max_coeff) max_coeff = c;
        if (row.coeffs[mode_formula(q, L)] != max_coeff)
            report(Check::cmax_formula, "closed-form value differs from scanned maximum");
    }
    if (wants(checks, Check::mattner_roos) && L >= 1) {
        const BoundCheck bc = check_mattner_roos(q, L);
        result.slack = bc.slack;
        if (!bc.holds) {
            std::ostringstream os;
            os << "c = " << bc.value.str(12) << " >= bound " << bc.bound.str(12)
               << " (slack " << bc.slack.str(6) << ")";
            report(Check::mattner_roos, os.str());
        }
    }
    if (wants(checks, Check::monotone) && L >= 1) {
        if (max_prob(q, L).value > max_prob(q, L - 1).value)
            report(Check::monotone, "c_{q,L} > c_{q,L-1}");
    }
    return result;
}

ScanReport merge_cells(int q_lo, int q_hi, long L_lo, long L_hi,
                       const std::vector<Check>& checks, std::vector<CellResult>& cells) {
    ScanReport report;
    report.cells = static_cast<long>(cells.size());
    const long L_count = L_hi - L_lo + 1;
    const bool track_slack = wants(checks, Check::mattner_roos);
    for (int q = q_lo; q <= q_hi; ++q) {
        for (long L = L_lo; L <= L_hi; ++L) {
            CellResult& cell = cells[(q - q_lo) * L_count + (L - L_lo)];
            for (Violation& v : cell.violations) report.violations.push_back(std::move(v));
            if (track_slack && cell.slack) {
                if (!report.has_min_slack || *cell.slack < report.min_slack) {
                    report.has_min_slack = true;
                    report.min_slack = *cell.slack;
                    report.min_slack_q = q;
                    report.min_slack_L = L;
                }
            }
        }
    }
    return report;
}

void validate_grid(int q_lo, long L_lo) {
    if (q_lo < 1) throw std::invalid_argument("q range must start at 1 or above");
    if (L_lo < 0) throw std::invalid_argument("L range must start at 0 or above");
}

}  // namespace

ScanReport scan_grid(int q_lo, int q_hi, long L_lo, long L_hi, const std::vector<Check>& checks,
                     int jobs) {
    if (q_lo > q_hi || L_lo > L_hi) return ScanReport{};
    validate_grid(q_lo, L_lo);
    const long L_count = L_hi - L_lo + 1;
    const long total = static_cast<long>(q_hi - q_lo + 1) * L_count;
    std::vector<CellResult> cells(total);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long index = 0; index < total; ++index) {
        const int q = q_lo + static_cast<int>(index / L_count);
        const long L = L_lo + index % L_count;
        cells[index] = check_cell(q, L, checks);
    }
    return merge_cells(q_lo, q_hi, L_lo, L_hi, checks, cells);
}

ScanReport scan_grid_serial(int q_lo, int q_hi, long L_lo, long L_hi,
                            const std::vector<Check>& checks) {
    if (q_lo > q_hi || L_lo > L_hi) return ScanReport{};
    validate_grid(q_lo, L_lo);
    const long L_count = L_hi - L_lo + 1;
    const long total = static_cast<long>(q_hi - q_lo + 1) * L_count;
    std::vector<CellResult> cells(total);
    for (long index = 0; index < total; ++index) {
        const int q = q_lo + static_cast<int>(index / L_count);
        const long L = L_lo + index % L_count;
        cells[index] = check_cell(q, L, checks);
    }
    return merge_cells(q_lo, q_hi, L_lo, L_hi, checks, cells);
}

std::vector<Violation> scan_slc(int q_lo, int q_hi, long L_lo, long L_hi, int jobs) {
    return scan_grid(q_lo, q_hi, L_lo, L_hi, {Check::slc}, jobs).violations;
}

}  // namespace omu
