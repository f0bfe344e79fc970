#include "odograph/scalar.hpp"

#include "odograph/error.hpp"

namespace odograph {

ExactScalar::ExactScalar(Rational rational, BigInt radicand) : rational_(std::move(rational)), radical_(1) {
  rational_.canonicalize();
  if (radicand < 1) throw Error(ErrorKind::NonPositive, "square roots need a positive radicand");
  auto [square, free] = square_split(radicand);
  rational_ *= square;
  radical_ = rational_ == 0 ? BigInt(1) : free;
}

ExactScalar ExactScalar::sqrt(const BigInt& m) { return ExactScalar(Rational(1), m); }

ExactScalar ExactScalar::from_half_exponents(const std::vector<unsigned long>& sizes, const std::vector<long>& half) {
  // prod n_i^(h_i/2) = sqrt(a/b) = sqrt(ab)/b with a/b = prod n_i^h_i.
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < half.size(); ++i) {
    BigInt p = pow(BigInt(sizes.at(i)), static_cast<unsigned long>(half[i] < 0 ? -half[i] : half[i]));
    (half[i] < 0 ? den : num) *= p;
  }
  return ExactScalar(Rational(1, 1) / Rational(den), num * den);
}

ExactScalar ExactScalar::operator*(const ExactScalar& other) const {
  ExactScalar out;
  if (is_zero() || other.is_zero()) return out;
  // sqrt(r1) sqrt(r2) = g sqrt((r1/g)(r2/g)) with g = gcd(r1, r2); both squarefree.
  BigInt g = gcd(radical_, other.radical_);
  out.rational_ = rational_ * other.rational_ * g;
  out.radical_ = (radical_ / g) * (other.radical_ / g);
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.rational_ = -out.rational_;
  return out;
}

ExactScalar ExactScalar::operator+(const ExactScalar& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (radical_ != other.radical_) {
    throw Error(ErrorKind::Internal, "cannot add " + to_string() + " and " + other.to_string() + " exactly");
  }
  ExactScalar out;
  out.rational_ = rational_ + other.rational_;
  out.radical_ = out.rational_ == 0 ? BigInt(1) : radical_;
  return out;
}

std::strong_ordering ExactScalar::operator<=>(const ExactScalar& other) const {
  int c = cmp(radical_, other.radical_);
  if (c == 0) c = cmp(rational_, other.rational_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExactScalar::to_string() const {
  if (radical_ == 1) return rational_.get_str();
  std::string root = "sqrt(" + radical_.get_str() + ")";
  if (rational_ == 1) return root;
  if (rational_ == -1) return "-" + root;
  return rational_.get_str() + "*" + root;
}

}  // namespace odograph
