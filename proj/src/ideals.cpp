#include "odograph/ideals.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <numeric>

namespace odograph {

namespace {

void sort_unique(std::vector<BigInt>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

// Smallest c >= 0 with c = a (mod P) and c = b (mod Q), if any.
std::optional<BigInt> crt(const BigInt& a, const BigInt& P, const BigInt& b, const BigInt& Q) {
  BigInt g = gcd(P, Q);
  BigInt diff = b - a;
  if (floor_mod(diff, g) != 0) return std::nullopt;
  BigInt q = Q / g;
  BigInt k = 0;
  if (q > 1) {
    BigInt inv;
    BigInt pg = floor_mod(P / g, q);
    mpz_invert(inv.get_mpz_t(), pg.get_mpz_t(), q.get_mpz_t());
    k = floor_mod((diff / g) * inv, q);
  }
  return floor_mod(a + P * k, lcm(P, Q));
}

}  // namespace

std::vector<ExtensionPair> min_common_extensions(const Word& mu, const Word& nu) {
  require_same_spec(mu.spec(), nu.spec());
  const SpecPtr& spec = mu.spec();
  require_standard(*spec);
  Encoded em = encode(mu), en = encode(nu);
  Degree D = em.degree.join(en.degree);
  BigInt P = spec->npow(em.degree), Q = spec->npow(en.degree), total = spec->npow(D);
  std::vector<ExtensionPair> out;
  auto c0 = crt(em.code, P, en.code, Q);
  if (!c0) return out;
  BigInt L = lcm(P, Q);
  for (BigInt c = *c0; c < total; c += L) {
    out.push_back(ExtensionPair{decode(spec, D - em.degree, (c - em.code) / P),
                                decode(spec, D - en.degree, (c - en.code) / Q)});
  }
  return out;
}

LcmResult right_lcm(const Word& mu, const Word& nu) {
  auto ext = min_common_extensions(mu, nu);
  LcmResult r;
  r.count = ext.size();
  if (ext.empty()) {
    r.kind = LcmResult::Kind::NoCommonMultiple;
  } else if (ext.size() == 1) {
    r.kind = LcmResult::Kind::Unique;
    r.lcm = multiply(mu, ext.front().alpha);
  } else {
    r.kind = LcmResult::Kind::MultipleMinimal;
  }
  return r;
}

LcmMonoidVerdict is_right_lcm_monoid(const SpecPtr& spec) {
  require_standard(*spec);
  LcmMonoidVerdict v;
  for (std::size_t i = 0; i < spec->rank() && v.right_lcm; ++i) {
    for (std::size_t j = i + 1; j < spec->rank() && v.right_lcm; ++j) {
      unsigned long ni = spec->size(i), nj = spec->size(j);
      unsigned long l = std::gcd(ni, nj);
      if (l == 1) continue;
      v.right_lcm = false;
      LcmFailureWitness w;
      w.i = i;
      w.j = j;
      w.gcd = l;
      w.shifted = {Word(spec, {{i, 0}, {j, nj / l}}), Word(spec, {{j, 0}, {i, ni / l}})};
      w.zero = {Word(spec, {{i, 0}, {j, 0}}), Word(spec, {{j, 0}, {i, 0}})};
      auto holds = [](const std::pair<Word, Word>& rel) {
        return normal_form(rel.first).same_letters(normal_form(rel.second));
      };
      // Both are common extensions of x^i_0 and x^j_0 at degree e_i + e_j,
      // and they are different words.
      w.verified = holds(w.shifted) && holds(w.zero) && !(w.shifted.first == w.zero.first);
      v.witness = w;
    }
  }
  return v;
}

// ------------------------------------------------------ ConstructibleIdeal

ConstructibleIdeal ConstructibleIdeal::full(SpecPtr spec) {
  Degree zero(spec->rank());
  return from_codes(std::move(spec), zero, {BigInt(0)});
}

ConstructibleIdeal ConstructibleIdeal::empty(SpecPtr spec) {
  Degree zero(spec->rank());
  return from_codes(std::move(spec), zero, {});
}

ConstructibleIdeal ConstructibleIdeal::principal(const Word& alpha) {
  Encoded e = encode(alpha);
  return from_codes(alpha.spec(), e.degree, {e.code});
}

ConstructibleIdeal ConstructibleIdeal::from_codes(SpecPtr spec, Degree degree, std::vector<BigInt> codes) {
  require_standard(*spec);
  if (degree.rank() != spec->rank()) throw Error(ErrorKind::DegreeOutOfRange, "ideal degree has the wrong rank");
  BigInt bound = spec->npow(degree);
  for (const auto& c : codes) {
    if (c < 0 || c >= bound) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "code " + c.get_str() + " outside [0, " + bound.get_str() + ") at degree " + degree.to_string());
    }
  }
  sort_unique(codes);
  ConstructibleIdeal x;
  x.spec_ = std::move(spec);
  x.degree_ = codes.empty() ? Degree(x.spec_->rank()) : std::move(degree);
  x.codes_ = std::move(codes);
  return x;
}

ConstructibleIdeal ConstructibleIdeal::generated_by(SpecPtr spec, const std::vector<Word>& generators) {
  if (generators.empty()) return empty(std::move(spec));
  Degree D(spec->rank());
  for (const auto& w : generators) {
    require_same_spec(spec, w.spec());
    D = D.join(w.degree());
  }
  std::vector<BigInt> codes;
  for (const auto& w : generators) {
    auto inflated = principal(w).inflate(D);
    codes.insert(codes.end(), inflated.codes().begin(), inflated.codes().end());
  }
  return from_codes(std::move(spec), D, std::move(codes));
}

std::vector<Word> ConstructibleIdeal::generators() const {
  std::vector<Word> out;
  for (const auto& c : codes_) out.push_back(decode(spec_, degree_, c));
  return out;
}

bool ConstructibleIdeal::contains(const Word& w) const {
  require_same_spec(spec_, w.spec());
  if (codes_.empty() || !degree_.leq(w.degree())) return false;
  BigInt prefix = encode(w).code % spec_->npow(degree_);
  return std::binary_search(codes_.begin(), codes_.end(), prefix);
}

ConstructibleIdeal ConstructibleIdeal::inflate(const Degree& target) const {
  if (codes_.empty()) return *this;
  if (!degree_.leq(target)) {
    throw Error(ErrorKind::DegreeOutOfRange, "cannot inflate " + degree_.to_string() + " to " + target.to_string());
  }
  BigInt step = spec_->npow(degree_);
  BigInt count = spec_->npow(target - degree_);
  std::vector<BigInt> codes;
  for (const auto& c : codes_) {
    for (BigInt j = 0; j < count; ++j) codes.push_back(c + step * j);
  }
  return from_codes(spec_, target, std::move(codes));
}

bool ConstructibleIdeal::operator==(const ConstructibleIdeal& other) const {
  if (!(*spec_ == *other.spec_)) return false;
  if (is_empty() || other.is_empty()) return is_empty() && other.is_empty();
  Degree D = degree_.join(other.degree_);
  return inflate(D).codes_ == other.inflate(D).codes_;
}

std::string ConstructibleIdeal::to_string() const {
  std::string out = "degree " + degree_.to_string() + " codes {";
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ",";
    out += codes_[i].get_str();
  }
  return out + "}";
}

ConstructibleIdeal canonical_form(const ConstructibleIdeal& ideal) {
  return ConstructibleIdeal::from_codes(ideal.spec(), ideal.degree(), ideal.codes());
}

ConstructibleIdeal chain_ideal(const std::vector<std::pair<Word, Word>>& chain) {
  if (chain.empty()) throw Error(ErrorKind::EmptyChain, "an ideal chain needs at least one pair");
  const SpecPtr& spec = chain.front().first.spec();
  std::vector<Word> current;
  bool first = true;
  for (const auto& [mu, nu] : chain) {
    require_same_spec(spec, mu.spec());
    require_same_spec(spec, nu.spec());
    std::vector<Word> next;
    auto extend = [&](const Word& target) {
      for (auto& e : min_common_extensions(mu, target)) next.push_back(std::move(e.alpha));
    };
    if (first) {
      extend(nu);
    } else {
      for (const auto& alpha : current) extend(multiply(nu, alpha));
    }
    first = false;
    // Drop repeats; all survivors share one degree.
    std::vector<Word> unique;
    for (auto& w : next) {
      bool seen = std::any_of(unique.begin(), unique.end(), [&](const Word& u) { return u.same_letters(w); });
      if (!seen) unique.push_back(std::move(w));
    }
    current = std::move(unique);
    if (current.empty()) break;
  }
  return ConstructibleIdeal::generated_by(spec, current);
}

ConstructibleIdeal intersect(const ConstructibleIdeal& x, const ConstructibleIdeal& y) {
  require_same_spec(x.spec(), y.spec());
  const SpecPtr& spec = x.spec();
  if (x.is_empty() || y.is_empty()) return ConstructibleIdeal::empty(spec);
  std::vector<Word> generators;
  auto ys = y.generators();
  for (const auto& alpha : x.generators()) {
    for (const auto& beta : ys) {
      for (const auto& e : min_common_extensions(alpha, beta)) generators.push_back(multiply(alpha, e.alpha));
    }
  }
  if (generators.empty()) return ConstructibleIdeal::empty(spec);
  return ConstructibleIdeal::from_codes(spec, x.degree().join(y.degree()), [&] {
    std::vector<BigInt> codes;
    for (const auto& g : generators) codes.push_back(encode(g).code);
    return codes;
  }());
}

ExhaustiveResult is_exhaustive(const SpecPtr& spec, const std::vector<Word>& words, const BigInt& warn_bound) {
  require_standard(*spec);
  ExhaustiveResult r;
  r.d_max = Degree(spec->rank());
  if (words.empty()) {
    r.exhaustive = false;
    r.uncovered_code = BigInt(0);
    return r;
  }
  BigInt L = 1;
  std::vector<std::pair<BigInt, BigInt>> classes;  // (code, modulus)
  for (const auto& w : words) {
    require_same_spec(spec, w.spec());
    Encoded e = encode(w);
    r.d_max = r.d_max.join(e.degree);
    BigInt m = spec->npow(e.degree);
    L = lcm(L, m);
    classes.push_back({e.code, m});
  }
  BigInt total = spec->npow(r.d_max);
  if (total > warn_bound) {
    r.warning = "checking " + L.get_str() + " residues for n^d_max = " + total.get_str() + " words";
  }
  // Coverage only depends on the code modulo L, which divides n^d_max.
  for (BigInt c = 0; c < L; ++c) {
    bool hit = std::any_of(classes.begin(), classes.end(),
                           [&](const auto& cls) { return c % cls.second == cls.first; });
    if (!hit) {
      r.exhaustive = false;
      r.uncovered_code = c;
      return r;
    }
  }
  return r;
}

OpTerm ideal_projection(const ConstructibleIdeal& ideal) {
  OpTerm out;
  for (const auto& alpha : ideal.generators()) {
    OpTerm g = term_of_word(alpha);
    out = out + g * g.adjoint();
  }
  return out;
}

}  // namespace odograph
