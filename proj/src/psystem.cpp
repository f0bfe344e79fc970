#include "odograph/psystem.hpp"

#include "odograph/error.hpp"

namespace odograph {

std::string Monomial::to_string() const { return "gamma_" + exponent.get_str() + " at " + degree.to_string(); }

std::string LaurentScalar::to_string() const {
  if (zero) return "0";
  return coefficient.to_string() + " iota^" + power.get_str();
}

Monomial diamond(const KGraphSpec& spec, const Monomial& x, const Monomial& y) {
  if (x.degree.rank() != spec.rank() || y.degree.rank() != spec.rank()) {
    throw Error(ErrorKind::SpecMismatch, "monomial rank differs from the spec");
  }
  return Monomial{x.degree + y.degree, x.exponent + spec.npow(x.degree) * y.exponent};
}

LaurentScalar inner(const KGraphSpec& spec, const Monomial& x, const Monomial& y) {
  if (x.degree != y.degree) {
    throw Error(ErrorKind::DegreeMismatch,
                "inner product of degrees " + x.degree.to_string() + " and " + y.degree.to_string());
  }
  BigInt N = spec.npow(x.degree);
  BigInt diff = y.exponent - x.exponent;
  if (floor_mod(diff, N) != 0) return LaurentScalar::zero_value();
  return LaurentScalar::monomial(ExactScalar(Rational(N)), diff / N);
}

Monomial left_act(const BigInt& j, const Monomial& x) { return Monomial{x.degree, x.exponent + j}; }

OpTerm psi(const KGraphSpec& spec, const Monomial& x) {
  const Degree& p = x.degree;
  if (p.is_zero()) return OpTerm::f_power(x.exponent);
  std::size_t i0 = 0;
  while (p[i0] == 0) ++i0;
  BigInt n = spec.size(i0);
  BigInt s = floor_mod(x.exponent, n);
  BigInt l = floor_div(x.exponent, n);
  std::vector<long> half(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) half[i] = static_cast<long>(p[i]);
  OpTerm out = OpTerm::scalar(ExactScalar::from_half_exponents(spec.sizes(), half));
  out = out * OpTerm::generator(Generator::g(i0, s.get_ui())) * OpTerm::f_power(l);
  out = out * OpTerm::generator(Generator::g(i0, 0)).power(p[i0] - 1);
  for (std::size_t i = i0 + 1; i < p.rank(); ++i) out = out * OpTerm::generator(Generator::g(i, 0)).power(p[i]);
  return out;
}

OpTerm psi0(const LaurentScalar& value) {
  if (value.zero) return OpTerm();
  return OpTerm::f_power(value.power).scaled(value.coefficient);
}

namespace {

std::string tag(const Monomial& x) { return "l=" + x.exponent.get_str() + " p=" + x.degree.to_string(); }

}  // namespace

RelationReport verify_psi_isometry(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo, long hi) {
  RelationReport report;
  Model model = Model::qfz(spec);
  for (const auto& p : degrees) {
    for (long a = lo; a <= hi; ++a) {
      Monomial x{p, a};
      OpTerm px = psi(spec, x).adjoint();
      for (long b = lo; b <= hi; ++b) {
        Monomial y{p, b};
        report.add(check_relation("psi(x)* psi(y) = <x,y>: x " + tag(x) + ", y " + tag(y), px * psi(spec, y),
                                  psi0(inner(spec, x, y)), model));
      }
    }
  }
  return report;
}

RelationReport verify_psi_multiplicative(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo,
                                         long hi) {
  RelationReport report;
  Model model = Model::qfz(spec);
  for (const auto& p : degrees) {
    for (const auto& q : degrees) {
      for (long a = lo; a <= hi; ++a) {
        Monomial x{p, a};
        OpTerm px = psi(spec, x);
        for (long b = lo; b <= hi; ++b) {
          Monomial y{q, b};
          report.add(check_relation("psi(x) psi(y) = psi(x<>y): x " + tag(x) + ", y " + tag(y), px * psi(spec, y),
                                    psi(spec, diamond(spec, x, y)), model));
        }
      }
    }
  }
  return report;
}

RelationReport verify_left_action(const KGraphSpec& spec, const std::vector<Degree>& degrees, long lo, long hi,
                                  long jmax) {
  RelationReport report;
  Model model = Model::qfz(spec);
  if (jmax < 0) jmax = -jmax;
  for (const auto& p : degrees) {
    for (long a = lo; a <= hi; ++a) {
      Monomial x{p, a};
      OpTerm px = psi(spec, x);
      for (long j = -jmax; j <= jmax; ++j) {
        report.add(check_relation("psi(iota^j x) = f^j psi(x): j=" + std::to_string(j) + ", x " + tag(x),
                                  psi(spec, left_act(j, x)), OpTerm::f_power(j) * px, model));
      }
    }
  }
  return report;
}

RelationReport verify_cp_covariance(const KGraphSpec& spec, std::size_t color) {
  if (color >= spec.rank()) throw Error(ErrorKind::DegreeOutOfRange, "no color " + std::to_string(color + 1));
  RelationReport report;
  Model model = Model::qfz(spec);
  Degree e = Degree::unit(spec.rank(), color);
  unsigned long n = spec.size(color);
  OpTerm sum;
  for (unsigned long s = 0; s < n; ++s) {
    OpTerm theta = psi(spec, Monomial{e, BigInt(s + 1)}) * psi(spec, Monomial{e, BigInt(s)}).adjoint();
    sum = sum + theta.scaled(ExactScalar(Rational(1, n)));
  }
  report.add(check_relation("Cuntz-Pimsner covariance [color " + std::to_string(color + 1) + "]", sum,
                            OpTerm::generator(Generator::f()), model));
  return report;
}

}  // namespace odograph
