#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hamdisc {

// Exact arithmetic substrate. All combinatorial identities in this library are
// checked with these types; doubles appear only in asymptotic bound curves.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "a/b", "a", or a finite decimal such as "0.125". Returns nullopt on
// malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

Integer binomial(unsigned long n, long k);  // 0 outside 0 <= k <= n
Integer pow2(unsigned long exponent);
Rational rational_pow(const Rational& base, unsigned long exponent);
Rational rational_abs(const Rational& value);

}  // namespace hamdisc
