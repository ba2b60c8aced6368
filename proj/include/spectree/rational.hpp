#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spectree {

using BigInt = mpz_class;
// mpq_class keeps the denominator positive and the fraction reduced once
// canonicalized; every constructor in this project returns canonical values.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);
/// Copy in reduced form; values built with Rational(p, q) are not reduced.
Rational canonical(Rational q);

/// Parses "p/q", "p" or a finite decimal such as "1.25".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

int sign(const Rational& q);
int sign(const BigInt& z);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Largest m with m*m <= z; z must be nonnegative.
BigInt isqrt(const BigInt& z);
long isqrt(long z);

}  // namespace spectree
