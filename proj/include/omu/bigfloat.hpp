#ifndef OMU_BIGFLOAT_HPP
#define OMU_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "omu/numeric.hpp"

namespace omu {

/// Fixed-precision floating point on top of MPFR. 256 bits (~77 decimal
/// digits) so that comparisons against irrational bounds cannot flip from
/// rounding at the tolerances used anywhere in this project.
class BigFloat {
  public:
    static constexpr mpfr_prec_t precision_bits = 256;

    BigFloat();
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    explicit BigFloat(double value);
    explicit BigFloat(long value);
    explicit BigFloat(const BigInt& value);
    explicit BigFloat(const Rational& value);

    static BigFloat pi();

    double to_double() const;
    std::string str(int significant_digits = 25) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    int compare(const BigFloat& rhs) const;
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.compare(b) == 0; }

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat pow(const BigFloat& base, const BigFloat& exp);

  private:
    mpfr_t value_;
};

}  // namespace omu

#endif
