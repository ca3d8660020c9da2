#include "omu/convolution.hpp"

#include <stdexcept>

namespace omu {

PmfTable pmf(int q, long L) {
    const TriangleRow row = expand_row(q, L);
    const BigInt denom = pow_int(BigInt(q + 1), static_cast<unsigned long>(L));
    PmfTable table{q, L, {}};
    table.probs.reserve(row.coeffs.size());
    for (const BigInt& c : row.coeffs) table.probs.push_back(make_rational(c, denom));
    return table;
}

MaxProb max_prob(int q, long L) {
    const TriangleRow row = expand_row(q, L);
    const BigInt denom = pow_int(BigInt(q + 1), static_cast<unsigned long>(L));
    const long arg = mode_formula(q, L);
    const Rational formula_value = make_rational(row.coeffs[arg], denom);

    BigInt max_coeff = row.coeffs[0];
    for (const BigInt& c : row.coeffs)
        if (c > max_coeff) max_coeff = c;
    const Rational scan_value = make_rational(max_coeff, denom);
    if (scan_value != formula_value)
        throw std::logic_error("mode formula value differs from the scanned maximum");

    return MaxProb{q, L, formula_value, arg};
}

BoundCheck check_mattner_roos(int q, long L) {
    if (L < 1) throw std::invalid_argument("bound check requires L >= 1");
    const MaxProb c = max_prob(q, L);
    BoundCheck result;
    result.value = BigFloat(c.value);
    const long denom = static_cast<long>(q) * (q + 2) * L;
    result.bound = sqrt(BigFloat(6L) / (BigFloat::pi() * BigFloat(denom)));
    result.slack = result.bound - result.value;
    result.holds = result.value < result.bound;
    return result;
}

}  // namespace omu
