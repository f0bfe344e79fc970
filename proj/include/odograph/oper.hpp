#pragma once

// Operator words in f, g(i,s), u, s(n) and their adjoints, interpreted on
// the basis {delta_m : m in Z} of l^2(Z). Every generator moves basis
// vectors by an affine map defined on a residue class, so each word is a
// weighted sum of such maps and equality is decidable.

#include "odograph/kgraph.hpp"
#include "odograph/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odograph {

enum class GenKind { F, Fstar, G, Gstar, U, Ustar, S, Sstar };

struct Generator {
  GenKind kind = GenKind::F;
  std::size_t color = 0;   // G, Gstar (zero-based)
  std::size_t letter = 0;  // G, Gstar
  unsigned long index = 1;  // S, Sstar

  static Generator f() { return {GenKind::F}; }
  static Generator f_star() { return {GenKind::Fstar}; }
  static Generator g(std::size_t color, std::size_t letter) { return {GenKind::G, color, letter}; }
  static Generator g_star(std::size_t color, std::size_t letter) { return {GenKind::Gstar, color, letter}; }
  static Generator u() { return {GenKind::U}; }
  static Generator u_star() { return {GenKind::Ustar}; }
  static Generator s(unsigned long n) { return {GenKind::S, 0, 0, n}; }
  static Generator s_star(unsigned long n) { return {GenKind::Sstar, 0, 0, n}; }

  bool is_star() const;
  Generator adjoint() const;
  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;
};

/// Finite formal sum of scalar-weighted generator words. Words act right to
/// left, so the last generator is applied first.
class OpTerm {
 public:
  struct Summand {
    ExactScalar coefficient;
    std::vector<Generator> word;
  };

  OpTerm() = default;  // zero
  static OpTerm identity();
  static OpTerm generator(const Generator& g);
  static OpTerm scalar(const ExactScalar& c);
  /// f^n, with f* for negative n.
  static OpTerm f_power(const BigInt& n);
  static OpTerm u_power(const BigInt& n);

  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }

  OpTerm operator*(const OpTerm& other) const;
  OpTerm operator+(const OpTerm& other) const;
  OpTerm scaled(const ExactScalar& c) const;
  OpTerm adjoint() const;
  OpTerm power(unsigned long n) const;

  /// Same syntax as parse_op_term reads.
  std::string to_string() const;

 private:
  std::vector<Summand> summands_;
};

/// g_mu = g(x_1) ... g(x_n) for the letters of mu.
OpTerm term_of_word(const Word& word);

/// m = residue + modulus*t  |->  offset + slope*t; modulus, slope >= 1.
struct AffineMap {
  BigInt modulus = 1;
  BigInt residue = 0;
  BigInt offset = 0;
  BigInt slope = 1;

  static AffineMap identity() { return {}; }

  bool in_domain(const BigInt& m) const;
  /// Requires in_domain(m).
  BigInt apply(const BigInt& m) const;
  /// (A, B, C) with m |-> (A m + B) / C on the domain.
  std::tuple<BigInt, BigInt, BigInt> coefficients() const;
  /// The map applied after `first`, if the composite has nonempty domain.
  std::optional<AffineMap> after(const AffineMap& first) const;
  AffineMap adjoint() const;
  /// Re-expressed on the subclasses mod `modulus * factor`.
  std::vector<AffineMap> refine(const BigInt& factor) const;

  std::string to_string() const;

  bool operator==(const AffineMap&) const = default;
};

struct WeightedMap {
  AffineMap map;
  ExactScalar weight;
};

/// Normal form of an operator: one common modulus, entries sorted by
/// (residue, offset, slope, weight), equal maps merged, zero weights gone,
/// and the modulus made as coarse as the entries allow.
class CanonicalOp {
 public:
  CanonicalOp() = default;  // zero operator
  static CanonicalOp from_maps(const std::vector<WeightedMap>& maps);

  const BigInt& modulus() const { return modulus_; }
  const std::vector<WeightedMap>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Entries at modulus modulus()*factor, sorted.
  std::vector<WeightedMap> refined(const BigInt& factor) const;

  /// Image of delta_m as merged (weight, index) pairs sorted by index.
  std::vector<std::pair<ExactScalar, BigInt>> apply(const BigInt& m) const;

  std::string to_string() const;

  bool operator==(const CanonicalOp& other) const;

 private:
  BigInt modulus_ = 1;
  std::vector<WeightedMap> entries_;
};

/// First residue class (mod the common modulus) where two operators differ.
std::optional<BigInt> first_difference(const CanonicalOp& a, const CanonicalOp& b);

enum class ModelKind { QFZ, QN };

/// Interpretation of the generators. QFZ reads f and g(i,s) with the
/// alphabet sizes; QN reads u and s(n). Overrides replace the map of a
/// non-star generator (its adjoint follows); used to build broken models.
struct Model {
  ModelKind kind = ModelKind::QFZ;
  std::vector<unsigned long> sizes;
  std::map<Generator, AffineMap> overrides;

  static Model qfz(const KGraphSpec& spec);
  static Model qn(const KGraphSpec& spec);

  /// Throws InvalidGenerator for generators the model does not read.
  AffineMap map_of(const Generator& g) const;
};

CanonicalOp semantics(const OpTerm& term, const Model& model);

bool op_equal(const OpTerm& a, const OpTerm& b, const Model& model);

/// Pointwise evaluation straight from the generator formulas.
std::vector<std::pair<ExactScalar, BigInt>> eval(const OpTerm& term, const BigInt& m, const Model& model);

struct RelationCheck {
  std::string name;
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::optional<BigInt> witness;  // a basis index where the sides differ
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool pass() const;
  std::size_t failures() const;
  void add(RelationCheck check) { checks.push_back(std::move(check)); }
  void merge(const RelationReport& other);
};

/// Compares two terms in one model and records the outcome.
RelationCheck check_relation(const std::string& name, const OpTerm& lhs, const OpTerm& rhs, const Model& model);
/// Same, but each side in its own model.
RelationCheck check_relation(const std::string& name, const OpTerm& lhs, const Model& lhs_model, const OpTerm& rhs,
                             const Model& rhs_model);

/// Sum of g g* per color, f g(i,s) shifts, theta squares, f unitary,
/// g isometries. Throws UnsupportedFlavor unless the theta is standard.
RelationReport verify_universal_relations(const KGraphSpec& spec, const Model& model);
RelationReport verify_universal_relations(const KGraphSpec& spec);

/// g(i,0) g(j,0) = g(j,0) g(i,0); f^s g(i,0) = g(i,s);
/// f^(n_i^l N) g(i,0)^l = g(i,0)^l f^N for l <= max_l, |N| <= max_n.
RelationReport verify_properties(const KGraphSpec& spec, unsigned long max_l, long max_n);

/// The Q_N relations for the alphabet sizes, the substitution f -> u,
/// g(i,t) -> u^t s(n_i), and for k = 1 the rank-one presentation.
RelationReport verify_qn_homomorphism(const KGraphSpec& spec);

struct KernelWitness {
  Word left;
  Word right;
  CanonicalOp semantics;
  bool same_semantics = false;
  bool distinct_words = false;
};

/// Words prod (x^i_0)^p_i and prod (x^i_0)^q_i for a dependence
/// npow(p) = npow(q). Throws InvalidCertificate otherwise.
KernelWitness kernel_witness(const SpecPtr& spec, const Degree& p, const Degree& q);

/// Text syntax: summands joined by + or -, each an optional coefficient
/// (integer, a/b, sqrt(d), joined with *) followed by generators such as
/// f, f*, g(1,0), g(1,0)*, u^3, s(2)*. Colors in g(i,s) are 1-based.
OpTerm parse_op_term(const std::string& text);

}  // namespace odograph
