#include "doctest.h"
#include "helpers.hpp"

#include "odograph/independence.hpp"
#include "odograph/verify/acceptance.hpp"
#include "odograph/verify/oracles.hpp"

using namespace odograph;
using testing::D;

namespace {

using Factors = std::vector<std::pair<BigInt, unsigned long>>;

}  // namespace

TEST_CASE("integer factorization") {
  CHECK(factorize_integer(12) == Factors{{2, 2}, {3, 1}});
  CHECK(factorize_integer(1).empty());
  CHECK(factorize_integer(97) == Factors{{97, 1}});
  CHECK(factorize_integer(BigInt(1000003) * 999983) == Factors{{999983, 1}, {1000003, 1}});
  CHECK(testing::error_kind([] { factorize_integer(BigInt(1000003) * 1000033); }) == "FactorLimit");
  CHECK(factorize_integer(pow(BigInt(6), 10)) == Factors{{2, 10}, {3, 10}});
  CHECK(testing::error_kind([] { factorize_integer(0); }) == "NonPositive");
  CHECK(testing::error_kind([] { factorize_integer(-4); }) == "NonPositive");
}

TEST_CASE("multiplicative dependence") {
  DependenceResult r = multiplicative_dependence({2, 4});
  CHECK_FALSE(r.independent);
  REQUIRE(r.certificate);
  CHECK(r.certificate->p == D({2, 0}));
  CHECK(r.certificate->q == D({0, 1}));
  CHECK(r.rank == 1);

  for (unsigned long m : {2ul, 7ul, 12ul}) {
    DependenceResult same = multiplicative_dependence({m, m});
    REQUIRE(same.certificate);
    CHECK(same.certificate->p == D({1, 0}));
    CHECK(same.certificate->q == D({0, 1}));
  }

  DependenceResult three = multiplicative_dependence({6, 10, 15});
  CHECK(three.independent);
  CHECK(three.rank == 3);
  CHECK(three.matrix.primes == std::vector<BigInt>{2, 3, 5});

  CHECK(multiplicative_dependence({3}).independent);
  CHECK_FALSE(multiplicative_dependence({1, 5}).independent);
  CHECK(testing::error_kind([] { multiplicative_dependence({4, 0}); }) == "NonPositive");
}

TEST_CASE("simplicity verdicts") {
  CHECK(is_simple(make_standard({2, 3})).simple);
  CHECK(is_simple(make_standard({3})).simple);

  SimplicityVerdict v = is_simple(make_standard({2, 4}));
  CHECK_FALSE(v.simple);
  REQUIRE(v.kernel_witness);
  CHECK(v.kernel_witness->first.to_string() == "x1:0 x1:0");
  CHECK(v.kernel_witness->second.to_string() == "x2:0");

  ThetaTable t(2, std::vector<std::pair<std::size_t, std::size_t>>(2));
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t u = 0; u < 2; ++u) t[s][u] = {u, s};
  }
  SpecPtr tables = std::make_shared<const KGraphSpec>(KGraphSpec::from_tables({2, 2}, {{{0, 1}, t}}));
  CHECK(testing::error_kind([&] { is_simple(tables); }) == "UnsupportedFlavor");
}

TEST_CASE("property: verdicts agree with exponent search") {
  for (unsigned long a = 1; a <= 12; ++a) {
    for (unsigned long b = a; b <= 12; ++b) {
      std::vector<unsigned long> n{a, b};
      DependenceResult r = multiplicative_dependence(n);
      auto brute = oracle::exponent_collision(n, kDependenceSearchBound);
      CHECK(r.independent == !brute.has_value());
      if (r.certificate) {
        KGraphSpec spec = KGraphSpec::standard(n);
        CHECK(spec.npow(r.certificate->p) == spec.npow(r.certificate->q));
        CHECK_FALSE(r.certificate->p == r.certificate->q);
      }
    }
  }
}

TEST_CASE("property: certificates of rank-three tuples") {
  for (std::vector<unsigned long> n : {std::vector<unsigned long>{3, 16, 18}, std::vector<unsigned long>{4, 6, 9},
                                       std::vector<unsigned long>{2, 3, 5}, std::vector<unsigned long>{10, 12, 45}}) {
    DependenceResult r = multiplicative_dependence(n);
    CHECK(r.independent == !oracle::exponent_collision(n, kDependenceSearchBound).has_value());
    if (r.certificate) {
      KGraphSpec spec = KGraphSpec::standard(n);
      CHECK(spec.npow(r.certificate->p) == spec.npow(r.certificate->q));
    }
  }
}
