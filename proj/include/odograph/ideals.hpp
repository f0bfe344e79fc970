#pragma once

// Constructible right ideals of a standard-product k-graph monoid. Every
// such ideal is a union of principal ideals alpha F over generators alpha
// of one common degree, stored here by their codes.

#include "odograph/kgraph.hpp"
#include "odograph/oper.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odograph {

/// mu alpha = nu beta at degree d(mu) v d(nu).
struct ExtensionPair {
  Word alpha;
  Word beta;
};

/// Sorted by the code of the common extension. Throws UnsupportedFlavor.
std::vector<ExtensionPair> min_common_extensions(const Word& mu, const Word& nu);

struct LcmResult {
  enum class Kind { Unique, NoCommonMultiple, MultipleMinimal };
  Kind kind = Kind::NoCommonMultiple;
  std::optional<Word> lcm;
  std::size_t count = 0;
};

LcmResult right_lcm(const Word& mu, const Word& nu);

struct LcmFailureWitness {
  std::size_t i = 0, j = 0;
  unsigned long gcd = 1;
  /// x^i_0 x^j_{n_j/l} = x^j_0 x^i_{n_i/l}
  std::pair<Word, Word> shifted;
  /// x^i_0 x^j_0 = x^j_0 x^i_0
  std::pair<Word, Word> zero;
  bool verified = false;
};

struct LcmMonoidVerdict {
  bool right_lcm = true;
  std::optional<LcmFailureWitness> witness;
};

/// True iff the alphabet sizes are pairwise coprime.
LcmMonoidVerdict is_right_lcm_monoid(const SpecPtr& spec);

class ConstructibleIdeal {
 public:
  static ConstructibleIdeal full(SpecPtr spec);
  static ConstructibleIdeal empty(SpecPtr spec);
  static ConstructibleIdeal principal(const Word& alpha);
  /// Throws CodeOutOfRange / UnsupportedFlavor.
  static ConstructibleIdeal from_codes(SpecPtr spec, Degree degree, std::vector<BigInt> codes);
  /// Union of alpha F over words of possibly different degrees.
  static ConstructibleIdeal generated_by(SpecPtr spec, const std::vector<Word>& generators);

  const SpecPtr& spec() const { return spec_; }
  const Degree& degree() const { return degree_; }
  const std::vector<BigInt>& codes() const { return codes_; }
  bool is_empty() const { return codes_.empty(); }

  std::vector<Word> generators() const;
  bool contains(const Word& w) const;

  /// The same ideal over generators of degree `target` >= degree().
  ConstructibleIdeal inflate(const Degree& target) const;

  /// Equality of ideals, not of representations.
  bool operator==(const ConstructibleIdeal& other) const;

  std::string to_string() const;

 private:
  ConstructibleIdeal() = default;

  SpecPtr spec_;
  Degree degree_;
  std::vector<BigInt> codes_;  // sorted, distinct
};

/// Sorted, deduplicated codes. Idempotent.
ConstructibleIdeal canonical_form(const ConstructibleIdeal& ideal);

/// mu_n^{-1} nu_n ... mu_1^{-1} nu_1 F for the chain [(mu_1, nu_1), ...].
/// Throws EmptyChain.
ConstructibleIdeal chain_ideal(const std::vector<std::pair<Word, Word>>& chain);

/// Throws SpecMismatch.
ConstructibleIdeal intersect(const ConstructibleIdeal& x, const ConstructibleIdeal& y);

struct ExhaustiveResult {
  bool exhaustive = true;
  std::optional<BigInt> uncovered_code;  // at degree d_max
  Degree d_max;
  std::optional<std::string> warning;
};

inline constexpr unsigned long kExhaustiveWarnBound = 1000000;

/// Every word of degree d_max (the join of the degrees) has one of the
/// given words as a prefix. Warns when npow(d_max) exceeds warn_bound.
ExhaustiveResult is_exhaustive(const SpecPtr& spec, const std::vector<Word>& words,
                               const BigInt& warn_bound = BigInt(kExhaustiveWarnBound));

/// Sum of g_alpha g_alpha* over the generators.
OpTerm ideal_projection(const ConstructibleIdeal& ideal);

}  // namespace odograph
