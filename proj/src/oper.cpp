#include "odograph/oper.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace odograph {

// -------------------------------------------------------------- Generator

bool Generator::is_star() const {
  return kind == GenKind::Fstar || kind == GenKind::Gstar || kind == GenKind::Ustar || kind == GenKind::Sstar;
}

Generator Generator::adjoint() const {
  Generator out = *this;
  switch (kind) {
    case GenKind::F: out.kind = GenKind::Fstar; break;
    case GenKind::Fstar: out.kind = GenKind::F; break;
    case GenKind::G: out.kind = GenKind::Gstar; break;
    case GenKind::Gstar: out.kind = GenKind::G; break;
    case GenKind::U: out.kind = GenKind::Ustar; break;
    case GenKind::Ustar: out.kind = GenKind::U; break;
    case GenKind::S: out.kind = GenKind::Sstar; break;
    case GenKind::Sstar: out.kind = GenKind::S; break;
  }
  return out;
}

std::string Generator::to_string() const {
  std::string base;
  switch (kind) {
    case GenKind::F:
    case GenKind::Fstar: base = "f"; break;
    case GenKind::U:
    case GenKind::Ustar: base = "u"; break;
    case GenKind::G:
    case GenKind::Gstar: base = "g(" + std::to_string(color + 1) + "," + std::to_string(letter) + ")"; break;
    case GenKind::S:
    case GenKind::Sstar: base = "s(" + std::to_string(index) + ")"; break;
  }
  return is_star() ? base + "*" : base;
}

// ----------------------------------------------------------------- OpTerm

OpTerm OpTerm::identity() { return scalar(ExactScalar(1)); }

OpTerm OpTerm::generator(const Generator& g) {
  OpTerm t;
  t.summands_.push_back({ExactScalar(1), {g}});
  return t;
}

OpTerm OpTerm::scalar(const ExactScalar& c) {
  OpTerm t;
  if (!c.is_zero()) t.summands_.push_back({c, {}});
  return t;
}

namespace {

OpTerm power_of(Generator g, const BigInt& n) {
  if (n < 0) g = g.adjoint();
  BigInt count = abs(n);
  return OpTerm::generator(g).power(to_long(count));
}

}  // namespace

OpTerm OpTerm::f_power(const BigInt& n) { return power_of(Generator::f(), n); }

OpTerm OpTerm::u_power(const BigInt& n) { return power_of(Generator::u(), n); }

OpTerm OpTerm::operator*(const OpTerm& other) const {
  OpTerm out;
  for (const auto& a : summands_) {
    for (const auto& b : other.summands_) {
      Summand s{a.coefficient * b.coefficient, a.word};
      s.word.insert(s.word.end(), b.word.begin(), b.word.end());
      if (!s.coefficient.is_zero()) out.summands_.push_back(std::move(s));
    }
  }
  return out;
}

OpTerm OpTerm::operator+(const OpTerm& other) const {
  OpTerm out = *this;
  out.summands_.insert(out.summands_.end(), other.summands_.begin(), other.summands_.end());
  return out;
}

OpTerm OpTerm::scaled(const ExactScalar& c) const { return OpTerm::scalar(c) * *this; }

OpTerm OpTerm::adjoint() const {
  OpTerm out;
  for (const auto& s : summands_) {
    Summand a{s.coefficient, {}};
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) a.word.push_back(it->adjoint());
    out.summands_.push_back(std::move(a));
  }
  return out;
}

OpTerm OpTerm::power(unsigned long n) const {
  OpTerm out = identity();
  for (unsigned long i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string OpTerm::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    const auto& s = summands_[k];
    ExactScalar c = s.coefficient;
    if (k > 0) {
      if (c.rational() < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    std::string body;
    for (std::size_t p = 0; p < s.word.size();) {
      std::size_t q = p;
      while (q < s.word.size() && s.word[q] == s.word[p]) ++q;
      if (!body.empty()) body += ' ';
      body += s.word[p].to_string();
      if (q - p > 1) body += "^" + std::to_string(q - p);
      p = q;
    }
    if (body.empty()) {
      out += c.to_string();
    } else if (c == ExactScalar(1)) {
      out += body;
    } else if (c == ExactScalar(-1)) {
      out += "-" + body;
    } else {
      out += c.to_string() + " " + body;
    }
  }
  return out;
}

OpTerm term_of_word(const Word& word) {
  OpTerm out = OpTerm::identity();
  for (const auto& l : word.letters()) out = out * OpTerm::generator(Generator::g(l.color, l.value));
  return out;
}

// -------------------------------------------------------------- AffineMap

bool AffineMap::in_domain(const BigInt& m) const { return floor_mod(m - residue, modulus) == 0; }

BigInt AffineMap::apply(const BigInt& m) const { return offset + slope * ((m - residue) / modulus); }

std::tuple<BigInt, BigInt, BigInt> AffineMap::coefficients() const {
  return {slope, offset * modulus - slope * residue, modulus};
}

std::optional<AffineMap> AffineMap::after(const AffineMap& first) const {
  // Need first.offset + first.slope*t = residue (mod modulus).
  BigInt d = gcd(first.slope, modulus);
  BigInt diff = residue - first.offset;
  if (floor_mod(diff, d) != 0) return std::nullopt;
  BigInt reduced = modulus / d;
  BigInt t0 = 0;
  if (reduced > 1) {
    BigInt inv;
    BigInt b = floor_mod(first.slope / d, reduced);
    mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), reduced.get_mpz_t());
    t0 = floor_mod((diff / d) * inv, reduced);
  }
  AffineMap out;
  out.modulus = first.modulus * reduced;
  out.residue = first.residue + first.modulus * t0;
  out.slope = slope * (first.slope / d);
  out.offset = offset + slope * ((first.offset + first.slope * t0 - residue) / modulus);
  return out;
}

AffineMap AffineMap::adjoint() const {
  AffineMap out;
  out.modulus = slope;
  out.residue = floor_mod(offset, slope);
  BigInt shift = (offset - out.residue) / slope;
  out.offset = residue - modulus * shift;
  out.slope = modulus;
  return out;
}

std::vector<AffineMap> AffineMap::refine(const BigInt& factor) const {
  std::vector<AffineMap> out;
  for (BigInt j = 0; j < factor; ++j) {
    out.push_back(AffineMap{modulus * factor, residue + modulus * j, offset + slope * j, slope * factor});
  }
  return out;
}

std::string AffineMap::to_string() const {
  auto [a, b, c] = coefficients();
  std::string rule = "m -> (" + a.get_str() + "m" + (b < 0 ? " - " : " + ") + BigInt(abs(b)).get_str() + ")/" +
                     c.get_str();
  if (modulus == 1) return rule;
  return "m = " + residue.get_str() + " mod " + modulus.get_str() + ": " + rule;
}

// ------------------------------------------------------------ CanonicalOp

namespace {

using MapKey = std::tuple<BigInt, BigInt, BigInt>;  // residue, offset, slope

bool entry_less(const WeightedMap& a, const WeightedMap& b) {
  auto ka = std::tie(a.map.residue, a.map.offset, a.map.slope);
  auto kb = std::tie(b.map.residue, b.map.offset, b.map.slope);
  if (ka != kb) return ka < kb;
  return a.weight < b.weight;
}

bool entries_equal(const std::vector<WeightedMap>& a, const std::vector<WeightedMap>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].map == b[i].map) || !(a[i].weight == b[i].weight)) return false;
  }
  return true;
}

std::vector<BigInt> prime_divisors(BigInt m) {
  std::vector<BigInt> out;
  for (BigInt p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Tries to express entries at modulus L as entries at L/q.
std::optional<std::vector<WeightedMap>> coarsen(const std::vector<WeightedMap>& entries, const BigInt& modulus,
                                                const BigInt& q) {
  BigInt coarse = modulus / q;
  unsigned long parts = q.get_ui();
  std::map<BigInt, std::vector<std::vector<WeightedMap>>> classes;
  for (const auto& e : entries) {
    if (e.map.slope % q != 0) return std::nullopt;
    BigInt rho = e.map.residue % coarse;
    BigInt j = e.map.residue / coarse;
    BigInt slope = e.map.slope / q;
    auto& slots = classes[rho];
    if (slots.empty()) slots.resize(parts);
    slots[j.get_ui()].push_back(WeightedMap{AffineMap{coarse, rho, e.map.offset - slope * j, slope}, e.weight});
  }
  std::vector<WeightedMap> out;
  for (auto& [rho, slots] : classes) {
    for (auto& s : slots) std::sort(s.begin(), s.end(), entry_less);
    for (std::size_t j = 1; j < parts; ++j) {
      if (!entries_equal(slots[0], slots[j])) return std::nullopt;
    }
    out.insert(out.end(), slots[0].begin(), slots[0].end());
  }
  return out;
}

}  // namespace

CanonicalOp CanonicalOp::from_maps(const std::vector<WeightedMap>& maps) {
  CanonicalOp op;
  std::vector<const WeightedMap*> live;
  for (const auto& m : maps) {
    if (!m.weight.is_zero()) live.push_back(&m);
  }
  if (live.empty()) return op;
  BigInt L = 1;
  for (const auto* m : live) L = lcm(L, m->map.modulus);
  // Merge equal maps, keeping distinct radicals apart.
  std::map<std::pair<MapKey, BigInt>, Rational> sums;
  for (const auto* m : live) {
    for (const auto& fine : m->map.refine(L / m->map.modulus)) {
      sums[{MapKey{fine.residue, fine.offset, fine.slope}, m->weight.radical()}] += m->weight.rational();
    }
  }
  std::vector<WeightedMap> entries;
  for (const auto& [key, sum] : sums) {
    if (sum == 0) continue;
    const auto& [map_key, radical] = key;
    const auto& [residue, offset, slope] = map_key;
    entries.push_back(WeightedMap{AffineMap{L, residue, offset, slope}, ExactScalar(sum, radical)});
  }
  if (entries.empty()) return op;
  std::sort(entries.begin(), entries.end(), entry_less);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& q : prime_divisors(L)) {
      if (auto coarser = coarsen(entries, L, q)) {
        entries = std::move(*coarser);
        L /= q;
        std::sort(entries.begin(), entries.end(), entry_less);
        changed = true;
        break;
      }
    }
  }
  op.modulus_ = L;
  op.entries_ = std::move(entries);
  return op;
}

std::vector<WeightedMap> CanonicalOp::refined(const BigInt& factor) const {
  std::vector<WeightedMap> out;
  for (const auto& e : entries_) {
    for (const auto& fine : e.map.refine(factor)) out.push_back(WeightedMap{fine, e.weight});
  }
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

namespace {

std::vector<std::pair<ExactScalar, BigInt>> merge_images(std::vector<std::pair<ExactScalar, BigInt>> images) {
  std::map<std::pair<BigInt, BigInt>, Rational> sums;  // (index, radical)
  for (const auto& [w, m] : images) sums[{m, w.radical()}] += w.rational();
  std::vector<std::pair<ExactScalar, BigInt>> out;
  for (const auto& [key, sum] : sums) {
    if (sum != 0) out.push_back({ExactScalar(sum, key.second), key.first});
  }
  return out;
}

}  // namespace

std::vector<std::pair<ExactScalar, BigInt>> CanonicalOp::apply(const BigInt& m) const {
  std::vector<std::pair<ExactScalar, BigInt>> images;
  for (const auto& e : entries_) {
    if (e.map.in_domain(m)) images.push_back({e.weight, e.map.apply(m)});
  }
  return merge_images(std::move(images));
}

std::string CanonicalOp::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += "; ";
    out += e.map.to_string();
    if (!(e.weight == ExactScalar(1))) out += " weight " + e.weight.to_string();
  }
  return out;
}

bool CanonicalOp::operator==(const CanonicalOp& other) const { return !first_difference(*this, other).has_value(); }

std::optional<BigInt> first_difference(const CanonicalOp& a, const CanonicalOp& b) {
  BigInt L = lcm(a.modulus(), b.modulus());
  auto ea = a.refined(L / a.modulus());
  auto eb = b.refined(L / b.modulus());
  if (entries_equal(ea, eb)) return std::nullopt;
  auto by_residue = [](const std::vector<WeightedMap>& entries) {
    std::map<BigInt, std::vector<WeightedMap>> out;
    for (const auto& e : entries) out[e.map.residue].push_back(e);
    return out;
  };
  auto ga = by_residue(ea);
  auto gb = by_residue(eb);
  std::optional<BigInt> first;
  auto consider = [&](const BigInt& r) {
    if (!first || r < *first) first = r;
  };
  for (const auto& [r, list] : ga) {
    auto it = gb.find(r);
    if (it == gb.end() || !entries_equal(list, it->second)) consider(r);
  }
  for (const auto& [r, list] : gb) {
    if (!ga.count(r)) consider(r);
  }
  return first;
}

// ------------------------------------------------------------------ Model

Model Model::qfz(const KGraphSpec& spec) { return Model{ModelKind::QFZ, spec.sizes(), {}}; }

Model Model::qn(const KGraphSpec& spec) { return Model{ModelKind::QN, spec.sizes(), {}}; }

AffineMap Model::map_of(const Generator& g) const {
  Generator base = g.is_star() ? g.adjoint() : g;
  auto it = overrides.find(base);
  if (it != overrides.end()) return g.is_star() ? it->second.adjoint() : it->second;
  bool qn_gen = base.kind == GenKind::U || base.kind == GenKind::S;
  if (qn_gen != (kind == ModelKind::QN)) {
    throw Error(ErrorKind::InvalidGenerator, "generator " + g.to_string() + " is not part of the " +
                                                 std::string(kind == ModelKind::QN ? "QN" : "QFZ") + " model");
  }
  AffineMap m;
  switch (base.kind) {
    case GenKind::F:
    case GenKind::U: m.offset = 1; break;
    case GenKind::G:
      if (base.color >= sizes.size() || base.letter >= sizes[base.color]) {
        throw Error(ErrorKind::InvalidGenerator, "generator " + g.to_string() + " is outside the alphabet");
      }
      m.offset = base.letter;
      m.slope = sizes[base.color];
      break;
    case GenKind::S:
      if (base.index < 1) throw Error(ErrorKind::InvalidGenerator, "s(n) needs n >= 1");
      m.slope = base.index;
      break;
    default: break;
  }
  return g.is_star() ? m.adjoint() : m;
}

CanonicalOp semantics(const OpTerm& term, const Model& model) {
  std::vector<WeightedMap> maps;
  for (const auto& s : term.summands()) {
    std::optional<AffineMap> current = AffineMap::identity();
    for (auto it = s.word.rbegin(); it != s.word.rend() && current; ++it) {
      current = model.map_of(*it).after(*current);
    }
    if (current) maps.push_back(WeightedMap{*current, s.coefficient});
  }
  return CanonicalOp::from_maps(maps);
}

bool op_equal(const OpTerm& a, const OpTerm& b, const Model& model) {
  return semantics(a, model) == semantics(b, model);
}

std::vector<std::pair<ExactScalar, BigInt>> eval(const OpTerm& term, const BigInt& m, const Model& model) {
  std::vector<std::pair<ExactScalar, BigInt>> images;
  for (const auto& s : term.summands()) {
    std::optional<BigInt> x = m;
    for (auto it = s.word.rbegin(); it != s.word.rend() && x; ++it) {
      const Generator& g = *it;
      Generator base = g.is_star() ? g.adjoint() : g;
      if (model.overrides.count(base)) {
        AffineMap map = model.map_of(g);
        x = map.in_domain(*x) ? std::optional<BigInt>(map.apply(*x)) : std::nullopt;
        continue;
      }
      model.map_of(g);  // validates the generator against the model
      switch (g.kind) {
        case GenKind::F:
        case GenKind::U: *x += 1; break;
        case GenKind::Fstar:
        case GenKind::Ustar: *x -= 1; break;
        case GenKind::G: *x = BigInt(g.letter) + BigInt(model.sizes[g.color]) * *x; break;
        case GenKind::Gstar: {
          BigInt n = model.sizes[g.color];
          BigInt shifted = *x - BigInt(g.letter);
          if (floor_mod(shifted, n) == 0) {
            *x = shifted / n;
          } else {
            x.reset();
          }
          break;
        }
        case GenKind::S: *x *= g.index; break;
        case GenKind::Sstar:
          if (floor_mod(*x, BigInt(g.index)) == 0) {
            *x /= g.index;
          } else {
            x.reset();
          }
          break;
      }
    }
    if (x) images.push_back({s.coefficient, *x});
  }
  return merge_images(std::move(images));
}

// -------------------------------------------------------------- relations

bool RelationReport::pass() const { return failures() == 0; }

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

void RelationReport::merge(const RelationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

RelationCheck check_relation(const std::string& name, const OpTerm& lhs, const OpTerm& rhs, const Model& model) {
  return check_relation(name, lhs, model, rhs, model);
}

RelationCheck check_relation(const std::string& name, const OpTerm& lhs, const Model& lhs_model, const OpTerm& rhs,
                             const Model& rhs_model) {
  RelationCheck c{name, true, lhs.to_string(), rhs.to_string(), std::nullopt};
  auto diff = first_difference(semantics(lhs, lhs_model), semantics(rhs, rhs_model));
  if (diff) {
    c.pass = false;
    c.witness = *diff;
  }
  return c;
}

namespace {

OpTerm gen(const Generator& g) { return OpTerm::generator(g); }

std::string color_tag(std::size_t i) { return " [color " + std::to_string(i + 1) + "]"; }

// The checks shared by the f/g model and its image in Q_N; `map` turns a
// generator word into the term to test.
template <typename MapFn>
RelationReport universal_checks(const KGraphSpec& spec, const Model& model, MapFn map) {
  RelationReport report;
  OpTerm one = OpTerm::identity();
  OpTerm f = map(gen(Generator::f()));
  OpTerm fs = f.adjoint();
  report.add(check_relation("unitary f f* = 1", f * fs, one, model));
  report.add(check_relation("unitary f* f = 1", fs * f, one, model));
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    unsigned long n = spec.size(i);
    OpTerm sum;
    for (std::size_t s = 0; s < n; ++s) {
      OpTerm g = map(gen(Generator::g(i, s)));
      sum = sum + g * g.adjoint();
      report.add(check_relation("isometry g(" + std::to_string(i + 1) + "," + std::to_string(s) + ")* g = 1",
                                g.adjoint() * g, one, model));
    }
    report.add(check_relation("range projections sum to 1" + color_tag(i), sum, one, model));
    for (std::size_t s = 0; s < n; ++s) {
      OpTerm lhs = f * map(gen(Generator::g(i, s)));
      OpTerm rhs = s + 1 < n ? map(gen(Generator::g(i, s + 1))) : map(gen(Generator::g(i, 0))) * f;
      report.add(check_relation("f shifts letters" + color_tag(i), lhs, rhs, model));
    }
  }
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t j = i + 1; j < spec.rank(); ++j) {
      for (std::size_t s = 0; s < spec.size(i); ++s) {
        for (std::size_t t = 0; t < spec.size(j); ++t) {
          auto [tp, sp] = spec.theta(i, j, s, t);
          OpTerm lhs = map(gen(Generator::g(i, s))) * map(gen(Generator::g(j, t)));
          OpTerm rhs = map(gen(Generator::g(j, tp))) * map(gen(Generator::g(i, sp)));
          report.add(check_relation("theta square", lhs, rhs, model));
        }
      }
    }
  }
  return report;
}

OpTerm rho(const OpTerm& term, const KGraphSpec& spec) {
  OpTerm out;
  for (const auto& s : term.summands()) {
    OpTerm piece = OpTerm::scalar(s.coefficient);
    for (const auto& g : s.word) {
      switch (g.kind) {
        case GenKind::F: piece = piece * gen(Generator::u()); break;
        case GenKind::Fstar: piece = piece * gen(Generator::u_star()); break;
        case GenKind::G:
          piece = piece * OpTerm::u_power(g.letter) * gen(Generator::s(spec.size(g.color)));
          break;
        case GenKind::Gstar:
          piece = piece * gen(Generator::s_star(spec.size(g.color))) * OpTerm::u_power(-BigInt(g.letter));
          break;
        default: piece = piece * gen(g); break;
      }
    }
    out = out + piece;
  }
  return out;
}

}  // namespace

RelationReport verify_universal_relations(const KGraphSpec& spec, const Model& model) {
  require_standard(spec);
  return universal_checks(spec, model, [](const OpTerm& t) { return t; });
}

RelationReport verify_universal_relations(const KGraphSpec& spec) {
  return verify_universal_relations(spec, Model::qfz(spec));
}

RelationReport verify_properties(const KGraphSpec& spec, unsigned long max_l, long max_n) {
  require_standard(spec);
  RelationReport report;
  Model model = Model::qfz(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    OpTerm gi = gen(Generator::g(i, 0));
    for (std::size_t j = i + 1; j < spec.rank(); ++j) {
      OpTerm gj = gen(Generator::g(j, 0));
      report.add(check_relation("g(i,0) commute", gi * gj, gj * gi, model));
    }
    for (std::size_t s = 0; s < spec.size(i); ++s) {
      report.add(check_relation("f^s g(i,0) = g(i,s)" + color_tag(i), OpTerm::f_power(s) * gi,
                                gen(Generator::g(i, s)), model));
    }
    for (unsigned long l = 0; l <= max_l; ++l) {
      OpTerm gl = gi.power(l);
      for (long N = -max_n; N <= max_n; ++N) {
        BigInt shift = pow(BigInt(spec.size(i)), l) * N;
        report.add(check_relation("f^(n^l N) g^l = g^l f^N" + color_tag(i) + " l=" + std::to_string(l) +
                                      " N=" + std::to_string(N),
                                  OpTerm::f_power(shift) * gl, gl * OpTerm::f_power(N), model));
      }
    }
  }
  return report;
}

RelationReport verify_qn_homomorphism(const KGraphSpec& spec) {
  require_standard(spec);
  RelationReport report;
  Model qn = Model::qn(spec);
  Model qfz = Model::qfz(spec);
  OpTerm one = OpTerm::identity();
  OpTerm u = gen(Generator::u());
  std::vector<unsigned long> ns{1};
  for (auto n : spec.sizes()) {
    if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);
  }
  for (auto n : ns) {
    OpTerm sn = gen(Generator::s(n));
    for (auto m : ns) {
      report.add(check_relation("s(n) s(m) = s(nm) n=" + std::to_string(n) + " m=" + std::to_string(m),
                                sn * gen(Generator::s(m)), gen(Generator::s(n * m)), qn));
    }
    report.add(check_relation("u^n s(n) = s(n) u n=" + std::to_string(n), OpTerm::u_power(n) * sn, sn * u, qn));
    OpTerm sum;
    for (unsigned long t = 0; t < n; ++t) {
      sum = sum + OpTerm::u_power(t) * sn * sn.adjoint() * OpTerm::u_power(-BigInt(t));
    }
    report.add(check_relation("sum u^t s(n) s(n)* u^-t = 1 n=" + std::to_string(n), sum, one, qn));
  }
  RelationReport image = universal_checks(spec, qn, [&](const OpTerm& t) { return rho(t, spec); });
  for (auto& c : image.checks) c.name = "image in Q_N: " + c.name;
  report.merge(image);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t t = 0; t < spec.size(i); ++t) {
      OpTerm g = gen(Generator::g(i, t));
      report.add(check_relation("u^t s(n_i) acts as g(i,t)" + color_tag(i), rho(g, spec), qn, g, qfz));
    }
  }
  report.add(check_relation("u acts as f", u, qn, gen(Generator::f()), qfz));
  if (spec.rank() == 1) {
    unsigned long n = spec.size(0);
    OpTerm s = gen(Generator::s(n));
    report.add(check_relation("rank one: u^n s = s u", OpTerm::u_power(n) * s, s * u, qn));
    OpTerm sum;
    for (unsigned long i = 0; i < n; ++i) {
      OpTerm pi = OpTerm::u_power(i) * s;
      sum = sum + pi * pi.adjoint();
      report.add(check_relation("rank one: u^i s acts as g(1," + std::to_string(i) + ")", pi, qn,
                                gen(Generator::g(0, i)), qfz));
    }
    report.add(check_relation("rank one: sum u^i s s* u^-i = 1", sum, one, qn));
  }
  return report;
}

KernelWitness kernel_witness(const SpecPtr& spec, const Degree& p, const Degree& q) {
  if (p.rank() != spec->rank() || q.rank() != spec->rank()) {
    throw Error(ErrorKind::InvalidCertificate, "certificate has the wrong rank");
  }
  if (p == q) throw Error(ErrorKind::InvalidCertificate, "certificate needs p != q");
  if (spec->npow(p) != spec->npow(q)) {
    throw Error(ErrorKind::InvalidCertificate, "n^p = " + spec->npow(p).get_str() + " differs from n^q = " +
                                                   spec->npow(q).get_str());
  }
  auto zeros = [&](const Degree& d) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < d.rank(); ++i) letters.insert(letters.end(), d[i], Letter{i, 0});
    return Word(spec, letters);
  };
  KernelWitness w{zeros(p), zeros(q), {}, false, false};
  Model model = Model::qfz(*spec);
  CanonicalOp left = semantics(term_of_word(w.left), model);
  w.semantics = left;
  w.same_semantics = left == semantics(term_of_word(w.right), model);
  w.distinct_words = !(w.left == w.right);
  return w;
}

// ------------------------------------------------------------------ parser

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  OpTerm parse() {
    OpTerm out;
    skip();
    bool first = true;
    while (pos_ < text_.size() || first) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      OpTerm summand = parse_summand();
      out = out + (negative ? summand.scaled(ExactScalar(-1)) : summand);
      first = false;
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "operator term '" + text_ + "': " + why + " at position " + std::to_string(pos_));
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  BigInt integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return parse_bigint(std::string_view(text_).substr(start, pos_ - start));
  }
  unsigned long small(const BigInt& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) fail(std::string("bad ") + what);
    return v.get_ui();
  }

  OpTerm parse_summand() {
    OpTerm out = OpTerm::identity();
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (c == '\0' || c == '+' || c == '-') break;
      if (c == '*') {  // explicit multiplication sign between factors
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = integer();
        Rational r(num);
        if (peek() == '/') {
          ++pos_;
          BigInt den = integer();
          if (den == 0) fail("zero denominator");
          r = Rational(num, den);
          r.canonicalize();
        }
        out = out.scaled(ExactScalar(r));
      } else if (text_.compare(pos_, 5, "sqrt(") == 0) {
        pos_ += 5;
        BigInt radicand = integer();
        if (radicand < 1) fail("sqrt needs a positive integer");
        expect(')');
        out = out.scaled(ExactScalar::sqrt(radicand));
      } else {
        out = out * parse_generator();
      }
      any = true;
    }
    if (!any) fail("empty summand");
    return out;
  }

  OpTerm parse_generator() {
    char c = peek();
    Generator g;
    if (c == 'f' || c == 'u') {
      ++pos_;
      g = c == 'f' ? Generator::f() : Generator::u();
    } else if (c == 'g') {
      ++pos_;
      expect('(');
      unsigned long color = small(integer(), "generator index");
      expect(',');
      unsigned long letter = small(integer(), "letter");
      expect(')');
      if (color < 1) fail("generator indices start at 1");
      g = Generator::g(color - 1, letter);
    } else if (c == 's') {
      ++pos_;
      expect('(');
      unsigned long n = small(integer(), "s index");
      expect(')');
      if (n < 1) fail("s(n) needs n >= 1");
      g = Generator::s(n);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (peek() == '*') {
      ++pos_;
      g = g.adjoint();
    }
    if (peek() == '^') {
      ++pos_;
      BigInt e = integer();
      if (e < 0) {
        if (g.kind != GenKind::F && g.kind != GenKind::Fstar && g.kind != GenKind::U && g.kind != GenKind::Ustar) {
          fail("negative powers only for unitaries");
        }
        g = g.adjoint();
        e = -e;
      }
      return OpTerm::generator(g).power(small(e, "exponent"));
    }
    return OpTerm::generator(g);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

OpTerm parse_op_term(const std::string& text) { return TermParser(text).parse(); }

}  // namespace odograph
