#include "doctest.h"
#include "helpers.hpp"

#include "odograph/oper.hpp"
#include "odograph/verify/oracles.hpp"

#include <random>

using namespace odograph;
using testing::D;

namespace {

OpTerm T(const std::string& text) { return parse_op_term(text); }

CanonicalOp single(const AffineMap& m, const ExactScalar& w = ExactScalar(1)) {
  return CanonicalOp::from_maps({WeightedMap{m, w}});
}

std::vector<std::pair<ExactScalar, BigInt>> one_image(long index) { return {{ExactScalar(1), BigInt(index)}}; }

}  // namespace

TEST_CASE("semantics of single generators") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  Model qfz = Model::qfz(spec);
  CHECK(semantics(T("g(1,0)"), qfz) == single(AffineMap{1, 0, 0, 2}));
  CHECK(semantics(T("g(1,0)* g(1,0)"), qfz) == single(AffineMap::identity()));
  CanonicalOp even = semantics(T("g(1,0) g(1,0)*"), qfz);
  CHECK(even == single(AffineMap{2, 0, 0, 2}));
  CHECK(even.modulus() == 2);
  CHECK(semantics(T("g(2,1)*"), qfz) == single(AffineMap{3, 1, 0, 1}));
  CHECK(semantics(T("0"), qfz).is_zero());
  CHECK(semantics(T("f - f"), qfz).is_zero());
}

TEST_CASE("affine maps compose and invert") {
  AffineMap g21{1, 0, 1, 3};  // m -> 3m + 1
  AffineMap adj = g21.adjoint();
  CHECK(adj.modulus == 3);
  CHECK(adj.residue == 1);
  CHECK(adj.apply(7) == 2);
  auto back = adj.after(g21);
  REQUIRE(back);
  CHECK(*back == AffineMap::identity());
  // m -> 2m never lands on 1 mod 3 after m -> 3m + 1 inverts: empty composite.
  AffineMap to_even{1, 0, 0, 2};
  AffineMap only_odd = AffineMap{2, 1, 0, 1};
  CHECK_FALSE(only_odd.after(to_even).has_value());
  auto [a, b, c] = g21.coefficients();
  CHECK(a == 3);
  CHECK(b == 1);
  CHECK(c == 1);
  CHECK(g21.refine(2).size() == 2);
}

TEST_CASE("canonical form is refinement invariant") {
  std::vector<WeightedMap> coarse{{AffineMap{1, 0, 0, 2}, ExactScalar(1)}};
  std::vector<WeightedMap> fine;
  for (const auto& m : AffineMap{1, 0, 0, 2}.refine(6)) fine.push_back({m, ExactScalar(1)});
  CanonicalOp a = CanonicalOp::from_maps(coarse), b = CanonicalOp::from_maps(fine);
  CHECK(a == b);
  CHECK(b.modulus() == 1);
  CHECK(CanonicalOp::from_maps(a.refined(5)) == a);
}

TEST_CASE("op_equal examples") {
  Model m2 = Model::qfz(KGraphSpec::standard({2, 3}));
  CHECK(op_equal(T("f g(1,1)"), T("g(1,0) f"), m2));
  CHECK_FALSE(op_equal(T("f"), T("f*"), m2));
  Model m24 = Model::qfz(KGraphSpec::standard({2, 4}));
  CHECK(op_equal(T("g(1,0)^2"), T("g(2,0)"), m24));
  CHECK(op_equal(T("g(1,0) g(1,0)* + g(1,1) g(1,1)*"), T("1"), m2));
  CHECK_FALSE(op_equal(T("g(1,0) g(1,0)*"), T("1"), m2));
  CHECK(first_difference(semantics(T("g(1,0) g(1,0)*"), m2), semantics(T("1"), m2)) == BigInt(1));
}

TEST_CASE("eval") {
  Model m = Model::qfz(KGraphSpec::standard({2, 3}));
  CHECK(eval(T("f"), 0, m) == one_image(1));
  CHECK(eval(T("g(1,0)*"), 3, m).empty());
  CHECK(eval(T("g(1,0)"), 3, m) == one_image(6));
  CHECK(eval(T("g(1,1) + g(1,1)"), 3, m) == std::vector<std::pair<ExactScalar, BigInt>>{{ExactScalar(2), BigInt(7)}});
  CHECK(testing::error_kind([&] { eval(T("u"), 0, m); }) == "InvalidGenerator");
  CHECK(testing::error_kind([&] { eval(T("g(1,2)"), 0, m); }) == "InvalidGenerator");
}

TEST_CASE("parsing") {
  CHECK(T("f* g(1,0) g(1,0)*").to_string() == "f* g(1,0) g(1,0)*");
  CHECK(T("2*sqrt(3) f^2").summands().front().word.size() == 2);
  CHECK(T("1/2 f - u").summands().size() == 2);
  CHECK(T("f^-2").summands().front().word == std::vector<Generator>{Generator::f_star(), Generator::f_star()});
  CHECK(T("s(6)* u").summands().front().word.front() == Generator::s_star(6));
  CHECK(testing::error_kind([&] { T("g(0,1)"); }) == "Parse");
  CHECK(testing::error_kind([&] { T("g(1,0)^-1"); }) == "Parse");
  CHECK(testing::error_kind([&] { T("h"); }) == "Parse");
  // Printing and reparsing gives the same operator.
  Model m = Model::qfz(KGraphSpec::standard({2, 3}));
  OpTerm t = T("-1/3*sqrt(2) f^3 g(2,2)* + g(1,1) f*");
  CHECK(op_equal(T(t.to_string()), t, m));
}

TEST_CASE("universal relations") {
  CHECK(verify_universal_relations(KGraphSpec::standard({2, 3})).pass());
  CHECK(verify_universal_relations(KGraphSpec::standard({2, 4})).pass());
  CHECK(verify_universal_relations(KGraphSpec::standard({3, 4, 5})).pass());

  KGraphSpec spec = KGraphSpec::standard({2, 3});
  Model broken = Model::qfz(spec);
  broken.overrides[Generator::g(0, 1)] = AffineMap{1, 0, 0, 2};
  RelationReport r = verify_universal_relations(spec, broken);
  CHECK_FALSE(r.pass());
  bool sum_failed = false;
  for (const auto& c : r.checks) {
    if (c.name == "range projections sum to 1 [color 1]") {
      sum_failed = !c.pass;
      CHECK(c.witness.has_value());
    }
  }
  CHECK(sum_failed);

  SpecPtr tables = std::make_shared<const KGraphSpec>(
      KGraphSpec::from_tables({2, 2}, {{{0, 1}, ThetaTable{{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}}}));
  CHECK(testing::error_kind([&] { verify_universal_relations(*tables); }) == "UnsupportedFlavor");
}

TEST_CASE("corollary relations") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(verify_properties(spec, 3, 5).pass());
  CHECK(verify_properties(spec, 0, 0).pass());
  Model m = Model::qfz(spec);
  CHECK(op_equal(T("f g(1,0)"), T("g(1,1)"), m));
  CHECK(op_equal(T("f^4 g(1,0)^2"), T("g(1,0)^2 f"), m));
}

TEST_CASE("Q_N substitution") {
  CHECK(verify_qn_homomorphism(KGraphSpec::standard({2, 3})).pass());
  CHECK(verify_qn_homomorphism(KGraphSpec::standard({2})).pass());
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  Model qn = Model::qn(spec), qfz = Model::qfz(spec);
  CHECK(check_relation("rho g(1,1)", T("u s(2)"), qn, T("g(1,1)"), qfz).pass);
  CHECK(eval(T("u s(2)"), 5, qn) == one_image(11));
  CHECK(op_equal(T("s(1)"), T("1"), qn));
}

TEST_CASE("kernel witness") {
  SpecPtr s24 = make_standard({2, 4});
  KernelWitness w = kernel_witness(s24, D({2, 0}), D({0, 1}));
  CHECK(w.left.to_string() == "x1:0 x1:0");
  CHECK(w.right.to_string() == "x2:0");
  CHECK(w.same_semantics);
  CHECK(w.distinct_words);
  CHECK(w.semantics == single(AffineMap{1, 0, 0, 4}));

  KernelWitness same = kernel_witness(make_standard({5, 5}), D({1, 0}), D({0, 1}));
  CHECK(same.same_semantics);
  CHECK(same.distinct_words);
  CHECK(same.semantics == single(AffineMap{1, 0, 0, 5}));

  CHECK(testing::error_kind([&] { kernel_witness(s24, D({1, 0}), D({0, 1})); }) == "InvalidCertificate");
  CHECK(testing::error_kind([&] { kernel_witness(s24, D({1, 0}), D({1, 0})); }) == "InvalidCertificate");
}

TEST_CASE("property: semantics agrees with pointwise evaluation") {
  std::mt19937_64 rng(21);
  for (std::vector<unsigned long> n : {std::vector<unsigned long>{2, 3}, std::vector<unsigned long>{3, 4, 6}}) {
    KGraphSpec spec = KGraphSpec::standard(n);
    for (int i = 0; i < 60; ++i) {
      ModelKind kind = i % 3 == 0 ? ModelKind::QN : ModelKind::QFZ;
      Model model = kind == ModelKind::QN ? Model::qn(spec) : Model::qfz(spec);
      OpTerm t = oracle::random_term(rng, spec, kind);
      CHECK_FALSE(oracle::semantics_mismatch(t, model, -200, 200));
      // Adjoint and product laws, checked in the canonical domain.
      OpTerm u = oracle::random_term(rng, spec, kind);
      CHECK_FALSE(oracle::semantics_mismatch(t * u, model, -60, 60));
      CHECK_FALSE(oracle::semantics_mismatch(t.adjoint(), model, -60, 60));
      CHECK(op_equal(t.adjoint().adjoint(), t, model));
      CHECK(op_equal((t * u).adjoint(), u.adjoint() * t.adjoint(), model));
    }
  }
}
