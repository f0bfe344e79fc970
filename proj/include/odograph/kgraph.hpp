#pragma once

// Single-vertex k-graph monoids presented by theta-commutation tables.
//
// Colors are zero-based internally (color i is the generator family x^{i+1}
// of the text syntax). Letters are zero-based, [n] = {0, ..., n-1}.

#include "odograph/numeric.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace odograph {

enum class ThetaFlavor { StandardProduct, ExplicitTables };

struct Letter {
  std::size_t color = 0;
  std::size_t value = 0;

  auto operator<=>(const Letter&) const = default;
};

/// A point of N^k.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::size_t rank) : parts_(rank, 0) {}
  explicit Degree(std::vector<unsigned long> parts) : parts_(std::move(parts)) {}

  static Degree unit(std::size_t rank, std::size_t color);

  std::size_t rank() const { return parts_.size(); }
  unsigned long operator[](std::size_t i) const { return parts_[i]; }
  unsigned long& operator[](std::size_t i) { return parts_[i]; }
  const std::vector<unsigned long>& parts() const { return parts_; }

  unsigned long total() const;
  bool is_zero() const { return total() == 0; }

  /// Componentwise order.
  bool leq(const Degree& other) const;
  Degree join(const Degree& other) const;
  Degree meet(const Degree& other) const;
  Degree operator+(const Degree& other) const;
  /// Requires other.leq(*this).
  Degree operator-(const Degree& other) const;

  auto operator<=>(const Degree&) const = default;

  std::string to_string() const;

 private:
  std::vector<unsigned long> parts_;
};

/// Raw table for one color pair i<j: entry [s][t] is (t', s').
using ThetaTable = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

struct ThetaCollision {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, std::size_t>> sources;  // (s,t) pairs sharing an image
  std::pair<std::size_t, std::size_t> image;
};

struct ThetaReport {
  bool valid = true;
  bool matches_standard_formula = false;
  std::vector<ThetaCollision> collisions;
  std::vector<std::string> problems;
};

/// Rank, alphabet sizes and the theta bijections. Immutable once built.
class KGraphSpec {
 public:
  /// theta_{ij}(s,t) = ((s + t n_i) mod n_j, (s + t n_i) div n_j).
  static KGraphSpec standard(std::vector<unsigned long> sizes);

  /// Tables keyed by zero-based (i,j), i<j. Throws NotBijective.
  static KGraphSpec from_tables(std::vector<unsigned long> sizes,
                                const std::map<std::pair<std::size_t, std::size_t>, ThetaTable>& tables);

  /// Checks shape and bijectivity of raw tables without building a spec.
  static ThetaReport check_tables(const std::vector<unsigned long>& sizes,
                                  const std::map<std::pair<std::size_t, std::size_t>, ThetaTable>& tables);

  std::size_t rank() const { return sizes_.size(); }
  const std::vector<unsigned long>& sizes() const { return sizes_; }
  unsigned long size(std::size_t color) const { return sizes_[color]; }
  ThetaFlavor flavor() const { return flavor_; }

  /// True when every table agrees with the standard-product formula,
  /// regardless of how the spec was built.
  bool has_standard_theta() const { return standard_theta_; }

  /// (t', s') with x^i_s x^j_t = x^j_{t'} x^i_{s'}; requires i<j.
  std::pair<std::size_t, std::size_t> theta(std::size_t i, std::size_t j, std::size_t s, std::size_t t) const;
  /// (s, t) with x^j_{t'} x^i_{s'} = x^i_s x^j_t; requires i<j.
  std::pair<std::size_t, std::size_t> theta_inverse(std::size_t i, std::size_t j, std::size_t t_prime,
                                                    std::size_t s_prime) const;

  /// Rewrites the adjacent pair (a, b) of distinct colors into the equal
  /// pair with the colors swapped.
  std::pair<Letter, Letter> swap(const Letter& a, const Letter& b) const;

  BigInt npow(const Degree& degree) const;

  ThetaTable table(std::size_t i, std::size_t j) const;

  bool operator==(const KGraphSpec& other) const;

 private:
  KGraphSpec() = default;
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  void build_inverses();

  std::vector<unsigned long> sizes_;
  ThetaFlavor flavor_ = ThetaFlavor::StandardProduct;
  bool standard_theta_ = true;
  // forward_[pair][s * n_j + t] = (t', s'); inverse_[pair][t' * n_i + s'] = (s, t)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forward_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inverse_;
};

using SpecPtr = std::shared_ptr<const KGraphSpec>;

SpecPtr make_standard(std::vector<unsigned long> sizes);

/// An element of the monoid, stored as the letter sequence it was built
/// from. Equality is equality in the monoid (normal forms agree).
class Word {
 public:
  Word() = default;
  /// Throws LetterOutOfRange.
  Word(SpecPtr spec, std::vector<Letter> letters);

  static Word empty(SpecPtr spec) { return Word(std::move(spec), {}); }
  static Word letter(SpecPtr spec, std::size_t color, std::size_t value);

  const SpecPtr& spec() const { return spec_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  const Degree& degree() const { return degree_; }

  /// Colors are non-decreasing left to right.
  bool is_normal() const;

  /// Letter-identical (not monoid equality).
  bool same_letters(const Word& other) const { return letters_ == other.letters_; }

  bool operator==(const Word& other) const;

  std::string to_string() const;

 private:
  SpecPtr spec_;
  std::vector<Letter> letters_;
  Degree degree_;
};

struct Encoded {
  Degree degree;
  BigInt code;

  bool operator==(const Encoded&) const = default;
};

struct CubicWitness {
  std::size_t i = 0, j = 0, l = 0;
  std::size_t s = 0, t = 0, u = 0;
  std::vector<Letter> via_ij_first;
  std::vector<Letter> via_jl_first;
};

struct CubicReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::optional<CubicWitness> witness;
};

ThetaReport validate_theta(const KGraphSpec& spec);

CubicReport cubic_check(const KGraphSpec& spec);

/// Bubble-sorts colors with theta swaps.
Word normal_form(const Word& word);

/// Same rewriting as normal_form, but each step swaps a randomly chosen
/// inverted adjacent pair. Used to probe confluence.
Word normal_form_random_schedule(const Word& word, std::mt19937_64& rng);

/// Throws UnsupportedFlavor unless the spec has the standard theta.
Encoded encode(const Word& word);
Word decode(SpecPtr spec, const Degree& degree, const BigInt& code);

/// Throws SpecMismatch.
Word multiply(const Word& left, const Word& right);

/// (alpha, beta) with word = alpha beta and d(alpha) = front.
/// Throws DegreeOutOfRange.
std::pair<Word, Word> factorize(const Word& word, const Degree& front);

/// Throws SpecMismatch unless both specs agree.
void require_same_spec(const SpecPtr& a, const SpecPtr& b);

/// Throws UnsupportedFlavor unless the spec has the standard theta.
void require_standard(const KGraphSpec& spec);

/// Every normal-form word of exactly this degree, in code order (the
/// mixed-radix layout of encode, applied to any theta).
std::vector<Word> words_of_degree(const SpecPtr& spec, const Degree& degree);

/// Every degree p with total(p) <= max_length, in total-then-lex order.
std::vector<Degree> degrees_up_to_length(std::size_t rank, unsigned long max_length);

/// Every degree p <= bound componentwise.
std::vector<Degree> degrees_below(const Degree& bound);

}  // namespace odograph
