#include "omu/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace omu {

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational falling_factorial(const Rational& z, unsigned long k) {
    Rational r(1);
    Rational term(z);
    for (unsigned long i = 0; i < k; ++i) {
        r *= term;
        term -= 1;
    }
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("malformed rational: " + text);
        Rational r;
        if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("malformed rational: " + text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("malformed decimal: " + text);
        for (size_t i = 0; i < digits.size(); ++i) {
            if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
            if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                throw std::invalid_argument("malformed decimal: " + text);
        }
        BigInt num(digits, 10);
        BigInt den = pow_int(BigInt(10), text.size() - dot - 1);
        return make_rational(num, den);
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    r.canonicalize();
    return r;
}

}  // namespace omu
