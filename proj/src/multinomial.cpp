#include "omu/multinomial.hpp"

#include <stdexcept>

namespace omu {

namespace {

void validate_q_L(int q, long L) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (L < 0) throw std::invalid_argument("L must be >= 0");
}

}  // namespace

TriangleRow expand_row(int q, long L) {
    validate_q_L(q, L);
    std::vector<BigInt> row{BigInt(1)};
    for (long level = 1; level <= L; ++level) {
        std::vector<BigInt> next(static_cast<size_t>(q) * level + 1);
        const long prev_size = static_cast<long>(row.size());
        BigInt window(0);
        for (long k = 0; k < static_cast<long>(next.size()); ++k) {
            if (k < prev_size) window += row[k];
            if (k - q - 1 >= 0 && k - q - 1 < prev_size) window -= row[k - q - 1];
            next[k] = window;
        }
        row = std::move(next);
    }
    return TriangleRow{q, L, std::move(row)};
}

BigInt multinomial(int q, long L, long k) {
    validate_q_L(q, L);
    if (k < 0 || k > static_cast<long>(q) * L) return BigInt(0);
    return expand_row(q, L).coeffs[k];
}

namespace {

// sum over chains j_depth >= ... >= j_q >= 0 with remaining total `rest`,
// each next part capped by `cap`; `partial` carries C(L,j_1)...C(j_{depth-2},j_{depth-1})
BigInt nested_sum(int q, int depth, long cap, long rest, const BigInt& partial) {
    if (rest < 0) return BigInt(0);
    const long parts_left = q - depth + 1;
    if (rest > cap * parts_left) return BigInt(0);
    if (depth == q) {
        if (rest > cap) return BigInt(0);
        return partial * binomial(static_cast<unsigned long>(cap), static_cast<unsigned long>(rest));
    }
    BigInt total(0);
    for (long j = std::min(cap, rest); j >= 0; --j) {
        const BigInt c = binomial(static_cast<unsigned long>(cap), static_cast<unsigned long>(j));
        if (c == 0) continue;
        total += nested_sum(q, depth + 1, j, rest - j, partial * c);
    }
    return total;
}

}  // namespace

BigInt multinomial_nested(int q, long L, long k) {
    validate_q_L(q, L);
    if (k < 0 || k > static_cast<long>(q) * L) return BigInt(0);
    return nested_sum(q, 1, L, k, BigInt(1));
}

ModeResult modes(const TriangleRow& row) {
    if (row.coeffs.empty()) throw std::invalid_argument("empty row");
    ModeResult result;
    result.max_value = row.coeffs[0];
    for (long k = 1; k < static_cast<long>(row.coeffs.size()); ++k) {
        if (row.coeffs[k] > result.max_value) {
            result.max_value = row.coeffs[k];
            result.lo = result.hi = k;
        } else if (row.coeffs[k] == result.max_value) {
            result.hi = k;
        }
    }
    // the triangle rows are unimodal, so the argmax set must be one run
    for (long k = result.lo; k <= result.hi; ++k)
        if (row.coeffs[k] != result.max_value)
            throw std::logic_error("non-contiguous argmax set");
    result.kind = (result.lo == result.hi) ? ModeKind::peak : ModeKind::plateau;
    return result;
}

ModeResult modes(int q, long L) { return modes(expand_row(q, L)); }

long mode_formula(int q, long L) {
    validate_q_L(q, L);
    return (static_cast<long>(q) * L + 1) / 2;
}

std::vector<long> index_set(int q, long L) {
    validate_q_L(q, L);
    if (L < 1) throw std::invalid_argument("index_set requires L >= 1");
    long lo, hi;
    if (q % 2 == 0) {
        lo = -q / 2;
        hi = q / 2;
    } else if (L % 2 == 0) {
        lo = -(q + 1) / 2;
        hi = (q - 1) / 2;
    } else {
        lo = -(q - 1) / 2;
        hi = (q + 1) / 2;
    }
    std::vector<long> offsets;
    offsets.reserve(q + 1);
    for (long i = lo; i <= hi; ++i) offsets.push_back(i);
    return offsets;
}

bool verify_mode_recurrence(int q, long L) {
    validate_q_L(q, L);
    if (L < 1) throw std::invalid_argument("verify_mode_recurrence requires L >= 1");
    const TriangleRow current = expand_row(q, L);
    const TriangleRow previous = expand_row(q, L - 1);
    const long k_cur = mode_formula(q, L);
    const long k_prev = mode_formula(q, L - 1);
    BigInt sum(0);
    for (long offset : index_set(q, L)) {
        const long j = k_prev + offset;
        if (j >= 0 && j < static_cast<long>(previous.coeffs.size())) sum += previous.coeffs[j];
    }
    return sum == current.coeffs[k_cur];
}

bool is_unimodal(std::span<const BigInt> seq) {
    if (seq.empty()) return false;
    size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return i + 1 == seq.size();
}

std::vector<long> slc_violations(std::span<const BigInt> seq) {
    std::vector<long> out;
    for (size_t l = 1; l + 1 < seq.size(); ++l) {
        if (seq[l] * seq[l] <= seq[l - 1] * seq[l + 1]) out.push_back(static_cast<long>(l));
    }
    return out;
}

}  // namespace omu
