#pragma once

// Monomials gamma_l(z, p) = z^l of the product system over the circle
// k-graph, and their image under psi as operator terms.

#include "odograph/kgraph.hpp"
#include "odograph/oper.hpp"

#include <string>
#include <utility>
#include <vector>

namespace odograph {

struct Monomial {
  Degree degree;
  BigInt exponent;

  bool operator==(const Monomial& other) const { return degree == other.degree && exponent == other.exponent; }
  std::string to_string() const;
};

/// coefficient * iota^power in C(circle); zero is a separate state.
struct LaurentScalar {
  bool zero = true;
  ExactScalar coefficient;
  BigInt power;

  static LaurentScalar zero_value() { return {}; }
  static LaurentScalar monomial(const ExactScalar& c, const BigInt& power) {
    return c.is_zero() ? LaurentScalar{} : LaurentScalar{false, c, power};
  }
  bool operator==(const LaurentScalar& other) const {
    return zero == other.zero && (zero || (coefficient == other.coefficient && power == other.power));
  }
  std::string to_string() const;
};

/// Exponent l_x + npow(d(x)) l_y at degree d(x) + d(y).
Monomial diamond(const KGraphSpec& spec, const Monomial& x, const Monomial& y);

/// npow(p) iota^N when l_y - l_x = npow(p) N, zero otherwise. Throws
/// DegreeMismatch.
LaurentScalar inner(const KGraphSpec& spec, const Monomial& x, const Monomial& y);

/// iota^j gamma_l = gamma_{l+j}.
Monomial left_act(const BigInt& j, const Monomial& x);

/// sqrt(n^p) g(i0,s) f^l g(i0,0)^(p_i0 - 1) prod_{i>i0} g(i,0)^p_i with
/// exponent s + n_i0 l; degree 0 gives f^exponent.
OpTerm psi(const KGraphSpec& spec, const Monomial& x);

/// c iota^N |-> c f^N.
OpTerm psi0(const LaurentScalar& value);

/// psi(x)* psi(y) = psi0(<x, y>) for x, y of each degree, exponents in [lo, hi].
RelationReport verify_psi_isometry(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo, long hi);

/// psi(x) psi(y) = psi(x diamond y) for all ordered pairs of degrees.
RelationReport verify_psi_multiplicative(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo,
                                         long hi);

/// psi(iota^j x) = f^j psi(x) for j in [-|jmax|, |jmax|].
RelationReport verify_left_action(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo, long hi,
                                  long jmax);

/// sum_s (1/n_i) psi(gamma_{s+1}) psi(gamma_s)* = f at degree e_i.
RelationReport verify_cp_covariance(const KGraphSpec& spec, std::size_t color);

}  // namespace odograph
