#ifndef OMU_SERIES_HPP
#define OMU_SERIES_HPP

#include <initializer_list>
#include <vector>

#include "omu/bigfloat.hpp"
#include "omu/numeric.hpp"

namespace omu {

/// Formal power series over exact rationals, truncated at a fixed order N.
/// Coefficients beyond the order are unknown, not zero: every binary
/// operation truncates to the smaller operand order, and nothing ever
/// extends an order silently.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);
    TruncatedSeries(int order, std::initializer_list<long> coeffs);

    /// t, truncated at `order`
    static TruncatedSeries identity(int order);
    /// 1 + t + t^2 + ... + t^q, truncated at `order`
    static TruncatedSeries unit_poly(int q, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int n) const { return coeffs_[n]; }
    Rational& operator[](int n) { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries& other) const = default;

  private:
    std::vector<Rational> coeffs_;  // size order + 1
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// b must have a nonzero constant term.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries scale(const TruncatedSeries& a, const Rational& factor);

/// log: requires constant term 1. exp: requires constant term 0.
TruncatedSeries log(const TruncatedSeries& a);
TruncatedSeries exp(const TruncatedSeries& a);

/// a^z for exact rational z; requires constant term 1. Agrees with
/// iterated multiplication for non-negative integer z.
TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& z);

/// f(g(t)); g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse: f must have zero constant term and nonzero
/// linear coefficient; revert(f)(f(t)) = f(revert(f)(t)) = t up to order.
TruncatedSeries revert(const TruncatedSeries& f);

struct EvalResult {
    BigFloat value;
    BigFloat last_term;  // |a_N t0^N|, a truncation-error proxy
};

EvalResult eval_float(const TruncatedSeries& f, const BigFloat& t0);

}  // namespace omu

#endif
