#include "doctest.h"
#include "helpers.hpp"

#include "odograph/topo.hpp"

#include <algorithm>
#include <random>

using namespace odograph;
using testing::D;

namespace {

Angle A(const std::string& text) { return Angle::parse(text); }
PathPoint P(const std::string& angle, std::initializer_list<unsigned long> degree) { return {A(angle), D(degree)}; }

}  // namespace

TEST_CASE("angles reduce mod 1") {
  CHECK(A("7/3") == A("1/3"));
  CHECK(A("-1/4") == A("3/4"));
  CHECK(A("2/4").to_string() == "1/2");
  CHECK(A("1") == A("0"));
  CHECK(testing::error_kind([] { A("1/0"); }) == "Parse");
  CHECK(testing::error_kind([] { A("x"); }) == "Parse");
  CHECK(circle_distance(A("1/8"), A("7/8")) == Rational(1, 4));
  CHECK(circle_distance(A("0"), A("1/2")) == Rational(1, 2));
}

TEST_CASE("range and source") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(source(spec, P("1/3", {1, 0})) == P("2/3", {0, 0}));
  CHECK(source(spec, P("1/5", {1, 1})) == P("1/5", {0, 0}));
  CHECK(source(spec, P("3/7", {0, 0})) == range(P("3/7", {0, 0})));
  CHECK(range(P("1/5", {1, 1})) == P("1/5", {0, 0}));
}

TEST_CASE("compose") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(compose(spec, P("1/3", {1, 0}), P("2/3", {0, 1})) == P("1/3", {1, 1}));
  PathPoint x = P("1/3", {1, 0});
  CHECK(compose(spec, x, source(spec, x)) == x);
  CHECK(testing::error_kind([&] { compose(spec, x, P("1/3", {0, 1})); }) == "NotComposable");
}

TEST_CASE("factorize_path") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  auto [a, b] = factorize_path(spec, P("1/5", {1, 1}), D({1, 0}));
  CHECK(a == P("1/5", {1, 0}));
  CHECK(b == P("2/5", {0, 1}));
  auto [e, rest] = factorize_path(spec, P("1/5", {1, 1}), D({0, 0}));
  CHECK(e == P("1/5", {0, 0}));
  CHECK(rest == P("1/5", {1, 1}));
  CHECK(testing::error_kind([&] { factorize_path(spec, P("1/5", {1, 1}), D({2, 0})); }) == "DegreeOutOfRange");

  // All six orders of peeling off e_1, e_2, e_3 end at the same source.
  KGraphSpec three = KGraphSpec::standard({2, 3, 5});
  PathPoint x = P("2/11", {1, 1, 1});
  std::vector<std::size_t> order{0, 1, 2};
  do {
    PathPoint cur = x;
    std::vector<PathPoint> parts;
    for (std::size_t c : order) {
      Degree front(3);
      front[c] = 1;
      auto [head, tail] = factorize_path(three, cur, front);
      parts.push_back(head);
      cur = tail;
    }
    CHECK(cur.degree == D({0, 0, 0}));
    CHECK(source(three, parts.back()) == source(three, x));
    CHECK(compose(three, compose(three, parts[0], parts[1]), parts[2]) == x);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("roots") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  CHECK(roots(spec, A("0"), D({1, 0})) == std::vector<Angle>{A("0"), A("1/2")});
  auto six = roots(spec, A("0"), D({1, 1}));
  REQUIRE(six.size() == 6);
  for (int j = 0; j < 6; ++j) CHECK(six[j] == Angle(Rational(j, 6)));
  CHECK(roots(spec, A("1/3"), D({1, 0})) == std::vector<Angle>{A("1/6"), A("2/3")});
}

TEST_CASE("orbit_approx") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  OrbitWitness w = orbit_approx(spec, A("0"), A("1/3"), Rational(1, 12));
  CHECK(w.p == D({0, 1}));
  CHECK(w.root == A("1/3"));
  CHECK(w.distance == 0);

  OrbitWitness self = orbit_approx(spec, A("2/5"), A("2/5"), Rational(1, 1000));
  CHECK(self.p == D({0, 0}));
  CHECK(self.distance == 0);

  OrbitWitness far = orbit_approx(spec, A("0"), A("1/7"), Rational(1, 128));
  // 4/27 is already within 1/128 of 1/7, before the root gap drops below 1/64.
  CHECK(far.p == D({0, 3}));
  CHECK(far.root == A("4/27"));
  CHECK(far.distance <= Rational(1, 128));
  CHECK(circle_distance(far.root, A("1/7")) == far.distance);

  CHECK(testing::error_kind([] { orbit_approx(KGraphSpec::standard({1, 1}), A("0"), A("1/2"), Rational(1, 4)); }) ==
        "DegenerateSpec");
  CHECK(testing::error_kind([&] { orbit_approx(spec, A("0"), A("1/2"), Rational(0)); }) == "NonPositive");
}

TEST_CASE("contracting sets") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  ContractingWitness w = contracting_witness(spec, Rational(1, 32));
  CHECK(w.pass());
  CHECK(w.source_radius == Rational(1, 16));
  CHECK(contracting_witness(spec, Rational(1, 10)).pass());
  CHECK(testing::error_kind([&] { contracting_witness(spec, Rational(1, 4)); }) == "DeltaTooLarge");
  CHECK(testing::error_kind([&] { contracting_witness(spec, Rational(1, 8)); }) == "DeltaTooLarge");
  CHECK(testing::error_kind([&] { contracting_witness(spec, Rational(0)); }) == "DeltaTooLarge");
  CHECK(testing::error_kind([] { contracting_witness(KGraphSpec::standard({1, 3}), Rational(1, 32)); }) ==
        "DegenerateSpec");
}

TEST_CASE("property: roots map to v and are evenly spaced") {
  std::mt19937_64 rng(41);
  KGraphSpec spec = KGraphSpec::standard({2, 3, 5});
  std::uniform_int_distribution<long> num(0, 96), deg(0, 2);
  for (int i = 0; i < 120; ++i) {
    Angle v(Rational(num(rng), 97));
    Degree p({static_cast<unsigned long>(deg(rng)), static_cast<unsigned long>(deg(rng)),
              static_cast<unsigned long>(deg(rng))});
    auto ws = roots(spec, v, p);
    BigInt np = spec.npow(p);
    REQUIRE(BigInt(ws.size()) == np);
    for (std::size_t j = 0; j < ws.size(); ++j) {
      CHECK(source(spec, PathPoint{ws[j], p}) == PathPoint{v, Degree(3)});
      if (j > 0) CHECK(ws[j].value() - ws[j - 1].value() == Rational(1) / Rational(np));
    }
  }
}

TEST_CASE("property: compose and factorize are inverse") {
  std::mt19937_64 rng(42);
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  std::uniform_int_distribution<long> num(0, 200), deg(0, 3);
  for (int i = 0; i < 200; ++i) {
    PathPoint x{Angle(Rational(num(rng), 201)),
                Degree({static_cast<unsigned long>(deg(rng)), static_cast<unsigned long>(deg(rng))})};
    Degree front({std::min<unsigned long>(x.degree[0], deg(rng)), std::min<unsigned long>(x.degree[1], deg(rng))});
    auto [a, b] = factorize_path(spec, x, front);
    CHECK(compose(spec, a, b) == x);
    CHECK(source(spec, b) == source(spec, x));
  }
}

TEST_CASE("property: orbit distance is within half a root gap") {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  for (long b = 2; b <= 24; ++b) {
    OrbitWitness w = orbit_approx(spec, A("1/5"), Angle(Rational(1, b)), Rational(1, 50));
    CHECK(w.distance <= Rational(1, 50));
    CHECK(w.distance * 2 * Rational(spec.npow(w.p)) <= 1);
  }
}
