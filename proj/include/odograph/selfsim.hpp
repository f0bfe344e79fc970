#pragma once

// The odometer action of Z on a k-graph monoid and the Zappa-Szep product
// it defines. Group elements are plain big integers under addition.

#include "odograph/kgraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odograph {

struct ActionResult {
  Word image;
  BigInt restriction;
};

struct ZSElement {
  Word word;
  BigInt g;

  bool operator==(const ZSElement& other) const { return word == other.word && g == other.g; }
};

struct CompatibilityWitness {
  std::size_t i = 0, s = 0, j = 0, t = 0;
  std::vector<Letter> left;   // from (g.x^i_s)(g|.x^j_t)
  std::vector<Letter> right;  // from (g.x^j_t')(g|.x^i_s')
  BigInt left_restriction;
  BigInt right_restriction;
};

struct CompatibilityReport {
  bool pass = true;
  std::size_t squares_checked = 0;
  std::optional<CompatibilityWitness> witness;
};

/// How the generator 1 of Z acts on single letters: for each color and
/// letter, the image letter and the restriction. Other g are obtained by
/// iteration (or in closed form for the odometer).
class LetterAction {
 public:
  using Table = std::vector<std::vector<std::pair<std::size_t, BigInt>>>;

  static LetterAction odometer(SpecPtr spec);
  /// table[color][s] = (letter of 1.x, 1|_x). Each color must permute its
  /// letters; throws NotBijective otherwise.
  static LetterAction from_table(SpecPtr spec, Table table);

  const SpecPtr& spec() const { return spec_; }
  bool is_odometer() const { return odometer_; }
  const Table& table() const { return table_; }

  /// (letter of g.x^color_s, g|_{x^color_s}); throws LetterOutOfRange.
  std::pair<std::size_t, BigInt> apply(const BigInt& g, std::size_t color, std::size_t s) const;

 private:
  LetterAction() = default;

  SpecPtr spec_;
  bool odometer_ = false;
  Table table_;
  std::vector<std::vector<std::size_t>> inverse_;  // [color][image] = s
};

/// Odometer on one letter: ((s+g) mod n_i, floor((s+g)/n_i)).
ActionResult act_letter(const SpecPtr& spec, const BigInt& g, std::size_t color, std::size_t s);

/// Checks the extension identity for g = 1 on every theta square.
CompatibilityReport check_compatibility(const LetterAction& action);

/// Letter-by-letter chaining over the normal form. No compatibility check;
/// the axiom checker relies on that to inspect broken tables.
ActionResult act_recursive(const LetterAction& action, const BigInt& g, const Word& word);

/// Closed form for the standard theta: shift the code by g.
ActionResult act_closed_form(const BigInt& g, const Word& word);

/// Odometer action. Closed form when the theta is standard, otherwise
/// chaining after a compatibility check.
ActionResult act(const BigInt& g, const Word& word);
/// Throws IncompatibleAction when check_compatibility fails.
ActionResult act(const LetterAction& action, const BigInt& g, const Word& word);

BigInt restriction(const BigInt& g, const Word& word);

/// ((u,g)(v,h)) = (u (g.v), g|_v + h) under the odometer.
ZSElement zs_multiply(const ZSElement& a, const ZSElement& b);

struct AxiomFailure {
  std::string axiom;  // "B1" .. "B8"
  std::string detail;
};

struct AxiomReport {
  bool pass = true;
  std::size_t cases = 0;
  /// First counterexample per failing axiom, in axiom order.
  std::vector<AxiomFailure> failures;
  /// Cases where act_recursive and act_closed_form disagree (standard theta only).
  std::size_t evaluator_mismatches = 0;

  bool failed(const std::string& axiom) const;
};

/// Exhaustive check of the Zappa-Szep axioms for g, h in [g_min, g_max] and
/// normal-form words u, v with |u| + |v| <= max_length.
AxiomReport check_zs_axioms(const LetterAction& action, long g_min, long g_max, unsigned long max_length);

/// Smallest l' with restriction(l', word) = l, i.e. l * npow(d) - code.
BigInt solve_restriction(const Word& word, const BigInt& l);

}  // namespace odograph
