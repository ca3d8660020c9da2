#ifndef OMU_MULTINOMIAL_HPP
#define OMU_MULTINOMIAL_HPP

#include <span>
#include <vector>

#include "omu/numeric.hpp"

namespace omu {

/// One row of the coefficient triangle of (1 + x + ... + x^q)^L:
/// coeffs[k] is the coefficient of x^k, k = 0..qL.
struct TriangleRow {
    int q = 1;
    long L = 0;
    std::vector<BigInt> coeffs;

    long support() const { return static_cast<long>(coeffs.size()) - 1; }  // = qL
};

/// Full row via the order-(q+1) sliding-window recurrence, level by level.
/// q = 0 is rejected (point mass; would break the mode/plateau laws).
TriangleRow expand_row(int q, long L);

/// Coefficient of x^k in (1 + x + ... + x^q)^L; 0 outside 0..qL.
BigInt multinomial(int q, long L, long k);

/// Same value through the nested-binomial sum over weakly decreasing
/// chains j_1 >= ... >= j_q >= 0 with j_1 + ... + j_q = k. Exponential
/// enumeration; meant for small inputs and as an independent cross-check.
BigInt multinomial_nested(int q, long L, long k);

enum class ModeKind { peak, plateau };

/// Argmax set of a row: contiguous indices [lo, hi] all attaining max_value.
struct ModeResult {
    long lo = 0;
    long hi = 0;
    BigInt max_value;
    ModeKind kind = ModeKind::peak;

    long count() const { return hi - lo + 1; }
    bool contains(long k) const { return k >= lo && k <= hi; }
};

ModeResult modes(const TriangleRow& row);
ModeResult modes(int q, long L);

/// floor((qL+1)/2); always a member of the argmax set (for odd qL it is
/// the larger of the two plateau modes).
long mode_formula(int q, long L);

/// Window offsets I_q for the mode recurrence
///   binom(L, k_L) = sum_{i in I_q} binom(L-1, k_{L-1} + i).
/// The q-odd case splits on the parity of L-1 (the row being summed over):
///   q even              -> {-q/2, ..., q/2}
///   q odd, L even       -> {-(q+1)/2, ..., (q-1)/2}
///   q odd, L odd        -> {-(q-1)/2, ..., (q+1)/2}
std::vector<long> index_set(int q, long L);

/// Checks the mode recurrence above at (q, L), L >= 1.
bool verify_mode_recurrence(int q, long L);

/// Weak rise to a single maximal run, then weak fall.
bool is_unimodal(std::span<const BigInt> seq);

/// Interior indices l with a_l^2 <= a_{l-1} a_{l+1} (strict log-concavity
/// failures, equality included). Empty result means the sequence is SLC.
std::vector<long> slc_violations(std::span<const BigInt> seq);

}  // namespace omu

#endif
