#include "omu/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace omu {

BigFloat::BigFloat() {
    mpfr_init2(value_, precision_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, precision_bits);
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, precision_bits);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(double value) {
    mpfr_init2(value_, precision_bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value) {
    mpfr_init2(value_, precision_bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value) {
    mpfr_init2(value_, precision_bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value) {
    mpfr_init2(value_, precision_bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::pi() {
    BigFloat r;
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::str(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    std::vector<char> buf(significant_digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, value_);
    return std::string(buf.data());
}

BigFloat BigFloat::operator-() const {
    BigFloat r;
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

int BigFloat::compare(const BigFloat& rhs) const { return mpfr_cmp(value_, rhs.value_); }

BigFloat sqrt(const BigFloat& x) {
    BigFloat r;
    mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r;
    mpfr_abs(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exp) {
    BigFloat r;
    mpfr_pow(r.value_, base.value_, exp.value_, MPFR_RNDN);
    return r;
}

}  // namespace omu
