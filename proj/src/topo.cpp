#include "odograph/topo.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <optional>

namespace odograph {

namespace {

Rational frac(const Rational& x) {
  BigInt whole = floor_div(x.get_num(), x.get_den());
  Rational out = x - Rational(whole);
  out.canonicalize();
  return out;
}

}  // namespace

Angle::Angle(const Rational& value) : value_(frac(value)) {}

Angle Angle::parse(const std::string& text) { return Angle(parse_rational(text)); }

Rational circle_distance(const Angle& a, const Angle& b) {
  Rational d = abs(a.value() - b.value());
  Rational other = 1 - d;
  return d < other ? d : other;
}

std::string PathPoint::to_string() const { return "(" + angle.to_string() + ", " + degree.to_string() + ")"; }

PathPoint range(const PathPoint& x) { return PathPoint{x.angle, Degree(x.degree.rank())}; }

PathPoint source(const KGraphSpec& spec, const PathPoint& x) {
  return PathPoint{Angle(x.angle.value() * Rational(spec.npow(x.degree))), Degree(x.degree.rank())};
}

PathPoint compose(const KGraphSpec& spec, const PathPoint& x, const PathPoint& y) {
  if (x.degree.rank() != y.degree.rank()) throw Error(ErrorKind::DegreeMismatch, "paths of different rank");
  PathPoint s = source(spec, x);
  if (!(s.angle == y.angle)) {
    throw Error(ErrorKind::NotComposable,
                "source of " + x.to_string() + " is " + s.angle.to_string() + ", not " + y.angle.to_string());
  }
  return PathPoint{x.angle, x.degree + y.degree};
}

std::pair<PathPoint, PathPoint> factorize_path(const KGraphSpec& spec, const PathPoint& x, const Degree& front) {
  if (front.rank() != x.degree.rank() || !front.leq(x.degree)) {
    throw Error(ErrorKind::DegreeOutOfRange, "front " + front.to_string() + " not below " + x.degree.to_string());
  }
  PathPoint head{x.angle, front};
  PathPoint tail{source(spec, head).angle, x.degree - front};
  return {head, tail};
}

std::vector<Angle> roots(const KGraphSpec& spec, const Angle& v, const Degree& p) {
  BigInt N = spec.npow(p);
  std::vector<Angle> out;
  for (BigInt j = 0; j < N; ++j) out.emplace_back((v.value() + Rational(j)) / Rational(N));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitWitness orbit_approx(const KGraphSpec& spec, const Angle& v, const Angle& target, const Rational& epsilon) {
  if (epsilon <= 0) throw Error(ErrorKind::NonPositive, "epsilon must be positive");
  if (std::all_of(spec.sizes().begin(), spec.sizes().end(), [](unsigned long n) { return n == 1; })) {
    throw Error(ErrorKind::DegenerateSpec, "every alphabet has size 1, so orbits are single points");
  }
  for (unsigned long total = 0;; ++total) {
    for (const auto& p : degrees_up_to_length(spec.rank(), total)) {
      if (p.total() != total) continue;
      BigInt N = spec.npow(p);
      // Roots are (v + j)/N; the nearest to target has j next to target*N - v.
      Rational scaled = target.value() * Rational(N) - v.value();
      BigInt j0 = floor_div(scaled.get_num(), scaled.get_den());
      std::optional<OrbitWitness> best;
      for (BigInt j : {j0, BigInt(j0 + 1)}) {
        Angle w((v.value() + Rational(floor_mod(j, N))) / Rational(N));
        Rational d = circle_distance(w, target);
        if (!best || d < best->distance || (d == best->distance && w < best->root)) best = OrbitWitness{p, w, d};
      }
      if (best->distance <= epsilon) {
        // The root must map back to v.
        if (!(Angle(best->root.value() * Rational(N)) == v)) {
          throw Error(ErrorKind::Internal, "orbit root does not map back to its base point");
        }
        return *best;
      }
    }
  }
}

ContractingWitness contracting_witness(const KGraphSpec& spec, const Rational& delta) {
  unsigned long n1 = spec.size(0);
  if (n1 < 2) throw Error(ErrorKind::DegenerateSpec, "the first alphabet needs at least two letters");
  Rational radius = delta * Rational(n1);
  if (delta <= 0 || radius >= Rational(1, 4)) {
    throw Error(ErrorKind::DeltaTooLarge, "need 0 < delta and n_1 delta < 1/4, got delta = " + delta.get_str());
  }
  ContractingWitness w;
  w.delta = delta;
  w.source_radius = radius;
  w.range_inside = true;  // r(V x e_1) = V by definition of the range map
  w.closure_inside = -radius < -delta && delta < radius;
  w.strict = radius > delta;
  w.injective = radius < Rational(1, 2);
  return w;
}

}  // namespace odograph
