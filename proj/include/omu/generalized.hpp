#ifndef OMU_GENERALIZED_HPP
#define OMU_GENERALIZED_HPP

#include <string>
#include <utility>
#include <vector>

#include "omu/bigfloat.hpp"
#include "omu/numeric.hpp"
#include "omu/series.hpp"

namespace omu {

/// binom(z,k)_q for rational z by direct enumeration of weakly decreasing
/// tuples k_1 >= ... >= k_q >= 0 summing to k:
///   sum z(z-1)...(z-k_1+1) / ((k_1-k_2)! ... (k_{q-1}-k_q)! k_q!).
/// Exponential in k; meant for k up to ~20.
Rational gen_multinomial_direct(const Rational& z, int q, long k);

/// Same value through the position-weighted composition sum over
/// h_1 + 2 h_2 + ... + q h_q = k with m = h_1 + ... + h_q:
///   sum z(z-1)...(z-m+1) / (h_1! ... h_q!).
Rational gen_multinomial_lemma(const Rational& z, int q, long k);

/// Coefficients 0..order of (1 + t + ... + t^q)^z.
std::vector<Rational> gen_multinomial_series(const Rational& z, int q, int order);

/// Coefficients 0..count of sum_n binom(nz,n)_q t^n via series reversion:
/// u solves t = u P(u)^{-z} and the generating function is
/// P(u)/(P(u) - z u P'(u)) evaluated at u(t).
std::vector<Rational> lagrange_sequence(const Rational& z, int q, int count);

/// Coefficient n of G_q: c_{q,2n/q} = binom(2n/q, n)_q / (q+1)^{2n/q},
/// kept exact as (rational, exponent-of-(q+1)) with a float evaluation.
struct ScaledCoefficient {
    Rational coefficient;  // binom(2n/q, n)_q
    Rational exponent;     // 2n/q
    BigFloat value;        // coefficient / (q+1)^exponent
};

/// Requires even q >= 2.
std::vector<ScaledCoefficient> g_q_series(int q, int count);

/// Closed form of G_4 at a float argument, valid on ]-sqrt(5), 1[:
/// (1 - t^2/4 - t^4/8 - t (5 t^2 + 20)^{3/2} / 200)^{-1/2}.
BigFloat g4_closed_float(const BigFloat& t);

struct IdentityReport {
    std::string name;
    bool pass = false;
    bool exact = false;  // exact rational comparison (tolerance unused)
    long terms_used = 0;
    double tolerance = 0.0;
    BigFloat lhs;
    BigFloat rhs;
    BigFloat difference;
    std::string detail;
};

/// Coefficients of (1 + t/3)^{-1/2} (1 - t)^{-1/2} against
/// c_{2,n} = binom(n,n)_2 / 3^n, exactly, n <= order.
IdentityReport verify_g2_closed_form(int order);

/// G_4 closed form against the partial sum of its defining series at a
/// rational point t0 in ]-sqrt(5), 1[.
IdentityReport verify_g4_closed_form(const Rational& t0, int terms, double tol);

/// The two sum identities: sum (-5)^{-n} binom(n/2,n)_4 against target 2
/// (plain partial sums, geometric rate) and sum (-1)^n c_{4,n/2} against
/// 2/sqrt(5) (iterated-averaging acceleration of an ~n^{-1/2} alternating
/// tail). The first report also carries the independent closed-form value
/// of the series' own limit in `detail`.
std::pair<IdentityReport, IdentityReport> verify_corollary_sums(int terms1, double tol1, int terms2,
                                                                double tol2, int accel_depth);

/// sum t0^n c_{4,n} against (G_4(sqrt(t0)) + G_4(-sqrt(t0)))/2, t0 in [0,1).
IdentityReport verify_c4n_reconstruction(const Rational& t0, int terms, double tol);

/// Termwise exact equality of the three routes to binom(z,k)_q:
/// power-series coefficients, direct enumeration, composition sum.
IdentityReport verify_gf_equality(const Rational& z, int q, int max_k);

/// Direct enumeration against the composition sum only.
IdentityReport verify_lemma_equality(const Rational& z, int q, int max_k);

/// lagrange_sequence against binom(nz,n)_q by direct enumeration.
IdentityReport verify_lagrange(const Rational& z, int q, int count);

}  // namespace omu

#endif
