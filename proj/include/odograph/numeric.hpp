#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace odograph {

using BigInt = mpz_class;
using Rational = mpq_class;

// Floor division and the matching non-negative remainder; b must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);
/// Accepts "a", "a/b" or "-a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Splits m >= 1 as square^2 * squarefree and returns the pair.
std::pair<BigInt, BigInt> square_split(const BigInt& m);

/// Fits in a long; used when a value indexes a small table.
long to_long(const BigInt& value);

}  // namespace odograph
