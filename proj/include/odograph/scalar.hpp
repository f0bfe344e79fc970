#pragma once

#include "odograph/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace odograph {

/// rational * sqrt(radical) with a squarefree radical >= 1. Zero is stored
/// with radical 1, so equal values have equal fields.
class ExactScalar {
 public:
  ExactScalar() : rational_(0), radical_(1) {}
  ExactScalar(long value) : rational_(value), radical_(1) {}  // NOLINT: implicit on purpose
  ExactScalar(const Rational& value) : rational_(value), radical_(1) {}  // NOLINT
  ExactScalar(Rational rational, BigInt radicand);

  /// prod_i sizes[i]^(half[i]/2).
  static ExactScalar from_half_exponents(const std::vector<unsigned long>& sizes, const std::vector<long>& half);
  static ExactScalar sqrt(const BigInt& m);

  const Rational& rational() const { return rational_; }
  const BigInt& radical() const { return radical_; }
  bool is_zero() const { return rational_ == 0; }

  ExactScalar operator*(const ExactScalar& other) const;
  ExactScalar operator-() const;
  /// Only for equal radicals; anything else has no exact form here.
  ExactScalar operator+(const ExactScalar& other) const;

  bool operator==(const ExactScalar& other) const {
    return rational_ == other.rational_ && radical_ == other.radical_;
  }
  /// Orders by radical first, which is the grouping key of operator sums.
  std::strong_ordering operator<=>(const ExactScalar& other) const;

  /// "3", "-1/2", "sqrt(6)", "2*sqrt(3)".
  std::string to_string() const;

 private:
  Rational rational_;
  BigInt radical_;
};

}  // namespace odograph
