#include "odograph/numeric.hpp"

#include "odograph/error.hpp"

#include <cctype>

namespace odograph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::UnsupportedFlavor: return "UnsupportedFlavor";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::IncompatibleAction: return "IncompatibleAction";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::FactorLimit: return "FactorLimit";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::DegenerateSpec: return "DegenerateSpec";
    case ErrorKind::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::pair<BigInt, BigInt> square_split(const BigInt& m) {
  if (m < 1) throw Error(ErrorKind::NonPositive, "square_split needs a positive integer");
  BigInt rest = m;
  BigInt square = 1;
  BigInt free = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    square *= pow(p, e / 2);
    if (e % 2 == 1) free *= p;
  }
  free *= rest;
  return {square, free};
}

long to_long(const BigInt& value) {
  if (!value.fits_slong_p()) throw Error(ErrorKind::Internal, "integer " + value.get_str() + " does not fit a machine word");
  return value.get_si();
}

}  // namespace odograph
