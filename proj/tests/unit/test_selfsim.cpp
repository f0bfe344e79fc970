#include "doctest.h"
#include "helpers.hpp"

#include "odograph/selfsim.hpp"
#include "odograph/verify/oracles.hpp"

#include <random>
#include <set>

using namespace odograph;
using testing::D;
using testing::W;

namespace {

// Odometer letters with restriction `carry[c][s]` in place of the usual one.
LetterAction with_carries(const SpecPtr& spec, const std::vector<std::vector<long>>& carry) {
  LetterAction::Table t(spec->rank());
  for (std::size_t c = 0; c < spec->rank(); ++c) {
    for (std::size_t s = 0; s < spec->size(c); ++s) t[c].push_back({(s + 1) % spec->size(c), BigInt(carry[c][s])});
  }
  return LetterAction::from_table(spec, t);
}

}  // namespace

TEST_CASE("act_letter") {
  SpecPtr spec = make_standard({2, 3});
  ActionResult a = act_letter(spec, 1, 0, 1);
  CHECK(a.image.to_string() == "x1:0");
  CHECK(a.restriction == 1);
  ActionResult z = act_letter(spec, 0, 1, 2);
  CHECK(z.image.to_string() == "x2:2");
  CHECK(z.restriction == 0);
  ActionResult five = act_letter(spec, 5, 0, 1);
  CHECK(five.image.to_string() == "x1:0");
  CHECK(five.restriction == 3);
  ActionResult neg = act_letter(spec, -1, 0, 0);
  CHECK(neg.image.to_string() == "x1:1");
  CHECK(neg.restriction == -1);
  CHECK(testing::error_kind([&] { act_letter(spec, 1, 0, 2); }) == "LetterOutOfRange");
}

TEST_CASE("act_letter matches iterating the unit step") {
  SpecPtr spec = make_standard({2, 3});
  for (std::size_t s = 0; s < 3; ++s) {
    std::size_t letter = s;
    BigInt carry = 0;
    for (long g = 1; g <= 12; ++g) {
      ActionResult step = act_letter(spec, 1, 1, letter);
      letter = step.image.letters()[0].value;
      carry += step.restriction;
      ActionResult direct = act_letter(spec, g, 1, s);
      CHECK(direct.image.letters()[0].value == letter);
      CHECK(direct.restriction == carry);
    }
  }
}

TEST_CASE("act on words") {
  SpecPtr s2 = make_standard({2});
  ActionResult r = act(5, W(s2, "x1:1 x1:0"));
  CHECK(r.image.to_string() == "x1:0 x1:1");
  CHECK(r.restriction == 1);
  CHECK(act_recursive(LetterAction::odometer(s2), 5, W(s2, "x1:1 x1:0")).image.to_string() == "x1:0 x1:1");

  SpecPtr spec = make_standard({2, 3});
  Word mu = W(spec, "x1:1 x2:2");
  CHECK(act(0, mu).image == mu);
  CHECK(act(0, mu).restriction == 0);
  ActionResult one = act(1, mu);
  CHECK(one.image.to_string() == "x1:0 x2:0");
  CHECK(one.restriction == 1);
}

TEST_CASE("restriction") {
  SpecPtr spec = make_standard({2, 3});
  CHECK(restriction(1, W(spec, "x1:0")) == 0);
  CHECK(restriction(17, Word::empty(spec)) == 17);
  CHECK(restriction(7, W(spec, "x2:2")) == 3);
  CHECK(restriction(-7, W(spec, "x2:2")) == -2);
}

TEST_CASE("zs_multiply") {
  SpecPtr s2 = make_standard({2});
  ZSElement c = zs_multiply({W(s2, "x1:1"), 1}, {W(s2, "x1:1"), 0});
  CHECK(c.word.to_string() == "x1:1 x1:0");
  CHECK(c.g == 1);

  SpecPtr spec = make_standard({2, 3});
  Word mu = W(spec, "x2:1"), nu = W(spec, "x1:1");
  CHECK(zs_multiply({mu, 0}, {nu, 0}) == ZSElement{multiply(mu, nu), 0});
  CHECK(zs_multiply({Word::empty(spec), 4}, {Word::empty(spec), -9}) == ZSElement{Word::empty(spec), -5});
  CHECK(testing::error_kind([&] { zs_multiply({mu, 0}, {W(s2, "x1:0"), 0}); }) == "SpecMismatch");
}

TEST_CASE("compatibility") {
  SpecPtr spec = make_standard({2, 3});
  CHECK(check_compatibility(LetterAction::odometer(spec)).pass);

  // Equal alphabets with theta_12(s,t) = (s,t) and the odometer on both colors.
  ThetaTable swap(2, std::vector<std::pair<std::size_t, std::size_t>>(2));
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) swap[s][t] = {s, t};
  }
  SpecPtr same = std::make_shared<const KGraphSpec>(KGraphSpec::from_tables({2, 2}, {{{0, 1}, swap}}));
  CHECK(check_compatibility(LetterAction::odometer(same)).pass);

  // Odometer on color 1, reversed cycle on color 2, over the standard (2,2) theta.
  SpecPtr s22 = make_standard({2, 2});
  LetterAction::Table reversed{{{1, 0}, {0, 1}}, {{1, -1}, {0, 0}}};
  LetterAction mixed = LetterAction::from_table(s22, reversed);
  CompatibilityReport r = check_compatibility(mixed);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(testing::error_kind([&] { act(mixed, 1, W(s22, "x1:0 x2:0")); }) == "IncompatibleAction");

  CHECK(testing::error_kind([&] { LetterAction::from_table(s22, {{{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}}); }) ==
        "NotBijective");
}

TEST_CASE("table action equals the odometer when the table is the odometer") {
  SpecPtr spec = make_standard({2, 3});
  LetterAction table = with_carries(spec, {{0, 1}, {0, 0, 1}});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word w = oracle::random_word(rng, spec, i % 6);
    BigInt g = static_cast<long>(i) - 100;
    ActionResult a = act(table, g, w), b = act(g, w);
    CHECK(a.image == b.image);
    CHECK(a.restriction == b.restriction);
  }
}

TEST_CASE("zappa-szep axioms") {
  SpecPtr spec = make_standard({2, 3});
  AxiomReport ok = check_zs_axioms(LetterAction::odometer(spec), -6, 6, 3);
  CHECK(ok.pass);
  CHECK(ok.evaluator_mismatches == 0);
  CHECK_FALSE(ok.failed("B3"));

  SUBCASE("dropping every carry breaks the extension, not the restriction law") {
    // All restrictions become 0, so B6 holds trivially and B4 is what fails.
    AxiomReport r = check_zs_axioms(with_carries(spec, {{0, 0}, {0, 0, 0}}), -3, 3, 3);
    CHECK_FALSE(r.pass);
    CHECK(r.failed("B4"));
    CHECK_FALSE(r.failed("B6"));
    CHECK_FALSE(r.failed("B3"));
  }
  SUBCASE("a misplaced carry breaks B6") {
    AxiomReport r = check_zs_axioms(with_carries(spec, {{0, 1}, {0, 1, 0}}), -3, 3, 3);
    CHECK(r.failed("B6"));
    CHECK_FALSE(r.failed("B5"));
  }
  SUBCASE("rank one accepts any cyclic table") {
    AxiomReport r = check_zs_axioms(with_carries(make_standard({3}), {{2, 0, -1}}), -4, 4, 4);
    CHECK(r.pass);
  }
}

TEST_CASE("solve_restriction") {
  SpecPtr spec = make_standard({2, 3});
  Word x11 = W(spec, "x1:1");
  CHECK(solve_restriction(x11, 0) == -1);
  CHECK(restriction(-1, x11) == 0);
  CHECK(solve_restriction(Word::empty(spec), 9) == 9);
  CHECK(solve_restriction(W(spec, "x2:2"), 2) == 4);
  CHECK(restriction(4, W(spec, "x2:2")) == 2);
}

TEST_CASE("property: evaluators agree and restriction is surjective") {
  std::mt19937_64 rng(5);
  SpecPtr spec = make_standard({2, 3, 5});
  LetterAction odo = LetterAction::odometer(spec);
  for (int i = 0; i < 300; ++i) {
    Word w = oracle::random_word(rng, spec, i % 7);
    BigInt g = std::uniform_int_distribution<long>(-500, 500)(rng);
    ActionResult a = act_recursive(odo, g, w), b = act_closed_form(g, w);
    CHECK(a.image == b.image);
    CHECK(a.restriction == b.restriction);
    CHECK(a.image.degree() == w.degree());
    BigInt l = std::uniform_int_distribution<long>(-20, 20)(rng);
    BigInt g0 = solve_restriction(w, l);
    CHECK(restriction(g0, w) == l);
    CHECK(restriction(g0 - 1, w) != l);
  }
}

TEST_CASE("property: each g permutes the words of a degree") {
  SpecPtr spec = make_standard({2, 3});
  for (const auto& d : {D({2, 0}), D({1, 1}), D({1, 2})}) {
    auto words = words_of_degree(spec, d);
    for (long g = -7; g <= 7; ++g) {
      std::set<std::string> images;
      for (const auto& w : words) images.insert(act(g, w).image.to_string());
      CHECK(images.size() == words.size());
    }
  }
}

TEST_CASE("property: zs_multiply is associative") {
  std::mt19937_64 rng(6);
  SpecPtr spec = make_standard({2, 3});
  std::uniform_int_distribution<long> gd(-10, 10);
  for (int i = 0; i < 200; ++i) {
    ZSElement a{oracle::random_word(rng, spec, i % 3), gd(rng)};
    ZSElement b{oracle::random_word(rng, spec, (i / 3) % 3), gd(rng)};
    ZSElement c{oracle::random_word(rng, spec, (i / 9) % 3), gd(rng)};
    CHECK(zs_multiply(zs_multiply(a, b), c) == zs_multiply(a, zs_multiply(b, c)));
  }
}
