#include "doctest.h"

#include "odograph/error.hpp"
#include "odograph/scalar.hpp"

using namespace odograph;

TEST_CASE("radicals are squarefree") {
  CHECK(ExactScalar::sqrt(12).to_string() == "2*sqrt(3)");
  CHECK(ExactScalar::sqrt(9) == ExactScalar(3));
  CHECK(ExactScalar::sqrt(1) == ExactScalar(1));
  CHECK(ExactScalar::sqrt(6).to_string() == "sqrt(6)");
  CHECK(ExactScalar(Rational(-1, 2)).to_string() == "-1/2");
  CHECK(ExactScalar(Rational(3, 4), 8).to_string() == "3/2*sqrt(2)");
}

TEST_CASE("products") {
  CHECK(ExactScalar::sqrt(2) * ExactScalar::sqrt(2) == ExactScalar(2));
  CHECK(ExactScalar::sqrt(6) * ExactScalar::sqrt(10) == ExactScalar(Rational(2), 15));
  CHECK((ExactScalar::sqrt(3) * ExactScalar(0)).is_zero());
  CHECK((ExactScalar(0) * ExactScalar::sqrt(3)).radical() == 1);
  CHECK(-ExactScalar::sqrt(5) * -ExactScalar::sqrt(5) == ExactScalar(5));
}

TEST_CASE("half exponents of the alphabet sizes") {
  // The same value can arise from different exponent vectors when the sizes
  // are dependent: 2^(2/2) 4^(0/2) = 2^(0/2) 4^(1/2).
  CHECK(ExactScalar::from_half_exponents({2, 4}, {2, 0}) == ExactScalar::from_half_exponents({2, 4}, {0, 1}));
  CHECK(ExactScalar::from_half_exponents({2, 3}, {1, 1}) == ExactScalar::sqrt(6));
  CHECK(ExactScalar::from_half_exponents({2, 3}, {-1, 0}) == ExactScalar(Rational(1, 2), 2));
  CHECK(ExactScalar::from_half_exponents({2, 3}, {-1, 0}) * ExactScalar::sqrt(2) == ExactScalar(1));
  CHECK(ExactScalar::from_half_exponents({5}, {0}) == ExactScalar(1));
}

TEST_CASE("sums need a common radical") {
  CHECK(ExactScalar::sqrt(2) + ExactScalar::sqrt(8) == ExactScalar(3, 2));
  CHECK((ExactScalar::sqrt(2) + -ExactScalar::sqrt(2)).is_zero());
  CHECK((ExactScalar::sqrt(2) + -ExactScalar::sqrt(2)).radical() == 1);
  CHECK(ExactScalar(0) + ExactScalar::sqrt(7) == ExactScalar::sqrt(7));
  CHECK_THROWS_AS(ExactScalar::sqrt(2) + ExactScalar::sqrt(3), Error);
}

TEST_CASE("order groups by radical") {
  CHECK(ExactScalar(100) < ExactScalar::sqrt(2));
  CHECK(ExactScalar::sqrt(2) < ExactScalar(2, 2));
}
