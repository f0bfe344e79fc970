#pragma once

// Multiplicative independence of the alphabet sizes, decided exactly from
// prime exponent vectors.

#include "odograph/kgraph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace odograph {

/// Trial division by every integer up to this bound.
inline constexpr unsigned long kTrialDivisionLimit = 1000000;

/// Ascending (prime, exponent) pairs. Throws NonPositive for m < 1 and
/// FactorLimit when a cofactor above kTrialDivisionLimit^2 remains.
std::vector<std::pair<BigInt, unsigned long>> factorize_integer(const BigInt& m);

struct ExponentMatrix {
  std::vector<BigInt> primes;
  std::vector<std::vector<unsigned long>> rows;  // one per alphabet size
};

ExponentMatrix exponent_matrix(const std::vector<unsigned long>& sizes);

struct DependenceCertificate {
  Degree p;
  Degree q;
};

struct DependenceResult {
  bool independent = true;
  std::optional<DependenceCertificate> certificate;
  ExponentMatrix matrix;
  std::size_t rank = 0;  // rank of the exponent matrix over Q
};

DependenceResult multiplicative_dependence(const std::vector<unsigned long>& sizes);

struct SimplicityVerdict {
  bool simple = true;
  std::optional<DependenceCertificate> certificate;
  /// prod (x^i_0)^p_i and prod (x^i_0)^q_i, distinct words with equal
  /// images in the l^2 model.
  std::optional<std::pair<Word, Word>> kernel_witness;
};

/// Throws UnsupportedFlavor unless the theta is standard.
SimplicityVerdict is_simple(const SpecPtr& spec);

}  // namespace odograph
