#pragma once

// The topological k-graph over the circle with source map z -> z^(n^p),
// restricted to rational angles: a point is exp(2 pi i a/b), stored as a/b.

#include "odograph/kgraph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace odograph {

/// A reduced fraction in [0, 1).
class Angle {
 public:
  Angle() = default;
  /// Reduces any rational mod 1.
  explicit Angle(const Rational& value);
  /// "a/b" or "a"; reduced mod 1.
  static Angle parse(const std::string& text);

  const Rational& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  bool operator==(const Angle& other) const { return value_ == other.value_; }
  bool operator<(const Angle& other) const { return value_ < other.value_; }

 private:
  Rational value_ = 0;
};

/// Normalized arc length, in [0, 1/2].
Rational circle_distance(const Angle& a, const Angle& b);

struct PathPoint {
  Angle angle;
  Degree degree;

  bool operator==(const PathPoint& other) const { return angle == other.angle && degree == other.degree; }
  std::string to_string() const;
};

PathPoint range(const PathPoint& x);
PathPoint source(const KGraphSpec& spec, const PathPoint& x);

/// Throws NotComposable unless source(x) = range(y).
PathPoint compose(const KGraphSpec& spec, const PathPoint& x, const PathPoint& y);

/// ((z, front), (z^npow(front), d - front)). Throws DegreeOutOfRange.
std::pair<PathPoint, PathPoint> factorize_path(const KGraphSpec& spec, const PathPoint& x, const Degree& front);

/// All w with npow(p) w = v mod 1, ascending.
std::vector<Angle> roots(const KGraphSpec& spec, const Angle& v, const Degree& p);

struct OrbitWitness {
  Degree p;
  Angle root;
  Rational distance;
};

/// Smallest p (total degree, then lexicographic) with a root of v within
/// epsilon of target. Throws DegenerateSpec when every n_i is 1 and
/// NonPositive when epsilon <= 0.
OrbitWitness orbit_approx(const KGraphSpec& spec, const Angle& v, const Angle& target, const Rational& epsilon);

struct ContractingWitness {
  Rational delta;
  Rational source_radius;   // n_1 delta: s(V x e_1) is the arc (-n_1 delta, n_1 delta)
  bool range_inside = false;      // r(U_1) lies in V
  bool closure_inside = false;    // [-delta, delta] sits inside the source arc
  bool strict = false;            // and the inclusion is proper
  bool injective = false;         // n_1 delta < 1/2, so the arc does not wrap
  bool pass() const { return range_inside && closure_inside && strict && injective; }
};

/// Throws DeltaTooLarge unless 0 < delta and n_1 delta < 1/4, and
/// DegenerateSpec when n_1 < 2.
ContractingWitness contracting_witness(const KGraphSpec& spec, const Rational& delta);

}  // namespace odograph
