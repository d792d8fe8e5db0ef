#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

/// Arbitrary-size integer.
using BigInt = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den", or "num" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Parses "num" or "num/den"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace mzv
