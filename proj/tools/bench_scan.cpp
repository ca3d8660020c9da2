// Compares the OpenMP grid scan against the single-threaded reference on
// the same workload and confirms both produce identical reports.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "omu/scan.hpp"

using namespace omu;

namespace {

double run_ms(const char* label, ScanReport& report, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    report = body();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-22s %10.1f ms   (%ld cells, %zu violations)\n", label, ms, report.cells,
                report.violations.size());
    return ms;
}

bool same_report(const ScanReport& a, const ScanReport& b) {
    if (a.cells != b.cells || a.violations != b.violations) return false;
    if (a.has_min_slack != b.has_min_slack) return false;
    if (a.has_min_slack && !(a.min_slack == b.min_slack)) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int q_hi = 8;
    long L_hi = 120;
    if (argc > 1) q_hi = std::atoi(argv[1]);
    if (argc > 2) L_hi = std::atol(argv[2]);

    const std::vector<Check> checks{Check::slc, Check::symmetry, Check::unimodal, Check::mode,
                                    Check::normalization};
    std::printf("grid q in [1,%d], L in [1,%ld], checks: slc symmetry unimodal mode normalization\n",
                q_hi, L_hi);

    ScanReport serial, parallel;
    const double t_serial =
        run_ms("serial reference", serial, [&] { return scan_grid_serial(1, q_hi, 1, L_hi, checks); });
    const int threads = omp_get_max_threads();
    const double t_parallel = run_ms("openmp", parallel,
                                     [&] { return scan_grid(1, q_hi, 1, L_hi, checks, threads); });

    std::printf("threads: %d   speedup: %.2fx   reports identical: %s\n", threads,
                t_serial / t_parallel, same_report(serial, parallel) ? "yes" : "NO");
    return same_report(serial, parallel) ? 0 : 1;
}
