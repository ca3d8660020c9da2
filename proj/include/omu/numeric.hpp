#ifndef OMU_NUMERIC_HPP
#define OMU_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace omu {

using BigInt = mpz_class;
using Rational = mpq_class;

// base^exp for non-negative exp
BigInt pow_int(const BigInt& base, unsigned long exp);

BigInt factorial(unsigned long n);

// C(n, k); zero for k > n
BigInt binomial(unsigned long n, unsigned long k);

// z (z-1) ... (z-k+1); empty product for k = 0
Rational falling_factorial(const Rational& z, unsigned long k);

// num/den reduced to canonical form
Rational make_rational(const BigInt& num, const BigInt& den);

// "p" when the denominator is 1, otherwise "p/q"
std::string rational_str(const Rational& r);

// Accepts "p/q", plain integers and decimal literals ("0.25" -> 1/4).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace omu

#endif
