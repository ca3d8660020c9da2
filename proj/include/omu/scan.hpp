#ifndef OMU_SCAN_HPP
#define OMU_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "omu/bigfloat.hpp"

namespace omu {

enum class Check {
    slc,           // strict log-concavity of the row
    symmetry,      // coeffs[k] == coeffs[qL-k]
    unimodal,      // single maximal run
    mode,          // formula index in argmax set + peak/plateau law
    normalization, // row sum == (q+1)^L
    cmax_formula,  // closed-form maximal probability == scanned maximum
    mattner_roos,  // c_{q,L} < sqrt(6/(pi q (q+2) L))
    monotone,      // c_{q,L} <= c_{q,L-1}
};

std::string check_name(Check check);
Check parse_check(const std::string& name);
std::vector<Check> all_checks();

struct Violation {
    int q = 0;
    long L = 0;
    Check check = Check::slc;
    std::string detail;

    bool operator==(const Violation& other) const = default;
};

struct ScanReport {
    long cells = 0;
    std::vector<Violation> violations;  // ordered by (q, L) regardless of parallelism
    bool has_min_slack = false;         // filled when mattner_roos is among the checks
    BigFloat min_slack;
    int min_slack_q = 0;
    long min_slack_L = 0;
};

/// Grid scan over q in [q_lo, q_hi], L in [L_lo, L_hi]. Cells are
/// independent; this driver distributes them over OpenMP threads
/// (jobs <= 0 means the OpenMP default) and merges results in grid order.
ScanReport scan_grid(int q_lo, int q_hi, long L_lo, long L_hi, const std::vector<Check>& checks,
                     int jobs = 0);

/// Single-threaded reference implementation; kept for testing and for the
/// benchmark comparison. Must produce results identical to scan_grid.
ScanReport scan_grid_serial(int q_lo, int q_hi, long L_lo, long L_hi,
                            const std::vector<Check>& checks);

/// SLC-only convenience wrapper: the (q, L, violating indices) report.
std::vector<Violation> scan_slc(int q_lo, int q_hi, long L_lo, long L_hi, int jobs = 0);

}  // namespace omu

#endif
