#include "doctest.h"
#include "helpers.hpp"

#include "odograph/psystem.hpp"

using namespace odograph;
using testing::D;

namespace {

OpTerm T(const std::string& text) { return parse_op_term(text); }

Monomial G(long exponent, std::initializer_list<unsigned long> degree) { return {D(degree), BigInt(exponent)}; }

}  // namespace

TEST_CASE("diamond") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(diamond(spec, G(1, {1, 0}), G(1, {0, 1})) == G(3, {1, 1}));
  CHECK(diamond(spec, G(0, {0, 0}), G(4, {0, 1})) == G(4, {0, 1}));
  Monomial a = G(1, {1, 0}), b = G(1, {0, 1}), c = G(1, {1, 0});
  Monomial left = diamond(spec, diamond(spec, a, b), c), right = diamond(spec, a, diamond(spec, b, c));
  CHECK(left == right);
  CHECK(left == G(9, {2, 1}));
}

TEST_CASE("inner products") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(inner(spec, G(0, {1, 1}), G(6, {1, 1})) == LaurentScalar::monomial(6, 1));
  CHECK(inner(spec, G(-4, {1, 1}), G(-4, {1, 1})) == LaurentScalar::monomial(6, 0));
  CHECK(inner(spec, G(0, {1, 0}), G(1, {1, 0})) == LaurentScalar::zero_value());
  CHECK(inner(spec, G(5, {1, 0}), G(-1, {1, 0})) == LaurentScalar::monomial(2, -3));
  CHECK(testing::error_kind([&] { inner(spec, G(0, {1, 0}), G(0, {0, 1})); }) == "DegreeMismatch");
  // Shifting y by npow(p) adds one power of iota.
  CHECK(inner(spec, G(2, {0, 1}), G(5, {0, 1})) == LaurentScalar::monomial(3, 1));
}

TEST_CASE("left action") {
  CHECK(left_act(1, G(0, {1, 0})) == G(1, {1, 0}));
  CHECK(left_act(-2, G(5, {1, 0})) == G(3, {1, 0}));
  CHECK(left_act(0, G(7, {0, 2})) == G(7, {0, 2}));
}

TEST_CASE("psi") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  Model m = Model::qfz(spec);
  CHECK(op_equal(psi(spec, G(0, {1, 0})), T("sqrt(2) g(1,0)"), m));
  CHECK(op_equal(psi(spec, G(1, {0, 0})), T("f"), m));
  CHECK(op_equal(psi(spec, G(5, {1, 1})), T("sqrt(6) g(1,1) f^2 g(2,0)"), m));
  CHECK(op_equal(psi(spec, G(-1, {2, 0})), T("2 g(1,1) f^-1 g(1,0)"), m));
  CHECK(op_equal(psi0(LaurentScalar::monomial(6, 1)), T("6 f"), m));
  CHECK(psi0(LaurentScalar::zero_value()).is_zero());
}

TEST_CASE("psi identities") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(verify_psi_isometry(spec, {D({1, 0})}, -6, 6).pass());
  CHECK(verify_psi_isometry(spec, {D({1, 1})}, -3, 6).pass());
  CHECK(verify_psi_multiplicative(spec, {D({1, 0}), D({0, 1})}, -4, 4).pass());
  CHECK(verify_psi_multiplicative(spec, {D({0, 0}), D({0, 1})}, -3, 3).pass());
  CHECK(verify_left_action(spec, {D({1, 0}), D({1, 1})}, -4, 4, 3).pass());
  CHECK(verify_cp_covariance(spec, 0).pass());
  CHECK(verify_cp_covariance(spec, 1).pass());
  CHECK(verify_cp_covariance(KGraphSpec::standard({2}), 0).pass());

  KGraphSpec wide = KGraphSpec::standard({2, 4, 3});
  CHECK(verify_psi_multiplicative(wide, {D({0, 1, 0}), D({1, 0, 1}), D({0, 0, 1})}, -2, 2).pass());
  CHECK(verify_psi_isometry(wide, {D({0, 1, 1})}, -3, 3).pass());
  for (std::size_t c = 0; c < 3; ++c) CHECK(verify_cp_covariance(wide, c).pass());
}

TEST_CASE("property: diamond mirrors word coding") {
  // gamma_l at degree p pairs with the code l mod npow(p): diamond adds codes
  // the same way multiply does.
  SpecPtr spec = make_standard({2, 3});
  for (long a = 0; a < 6; ++a) {
    for (long b = 0; b < 6; ++b) {
      Monomial x = G(a, {1, 1}), y = G(b, {0, 1});
      Monomial z = diamond(*spec, x, y);
      Word wx = decode(spec, x.degree, BigInt(a % 6)), wy = decode(spec, y.degree, BigInt(b % 3));
      CHECK(encode(multiply(wx, wy)).code == z.exponent % spec->npow(z.degree));
    }
  }
}
