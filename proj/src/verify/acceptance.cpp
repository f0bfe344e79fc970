#include "odograph/verify/acceptance.hpp"

#include "odograph/error.hpp"
#include "odograph/ideals.hpp"
#include "odograph/independence.hpp"
#include "odograph/kgraph.hpp"
#include "odograph/oper.hpp"
#include "odograph/psystem.hpp"
#include "odograph/selfsim.hpp"
#include "odograph/topo.hpp"
#include "odograph/verify/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace odograph {

namespace {

// Collects the first few failures of a criterion.
struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failed < 3) notes << (failed ? "; " : "") << what;
    ++failed;
  }
  bool pass() const { return failed == 0; }
  std::string detail() const {
    std::ostringstream out;
    out << checks << " checks";
    if (failed) out << ", " << failed << " failed: " << notes.str();
    return out.str();
  }
};

std::vector<Word> words_up_to_length(const SpecPtr& spec, unsigned long max_length) {
  std::vector<Word> out;
  for (const auto& d : degrees_up_to_length(spec->rank(), max_length)) {
    for (auto& w : words_of_degree(spec, d)) out.push_back(std::move(w));
  }
  return out;
}

// 1. normal_form agrees with decode(encode) on every word of length <= 5.
std::string rewriting_coding(Tally& t, std::uint64_t) {
  SpecPtr spec = make_standard({2, 3, 5});
  std::vector<Letter> alphabet;
  for (std::size_t c = 0; c < spec->rank(); ++c) {
    for (std::size_t s = 0; s < spec->size(c); ++s) alphabet.push_back(Letter{c, s});
  }
  std::vector<Letter> letters;
  std::function<void()> walk = [&]() {
    Word w(spec, letters);
    Encoded e = encode(w);
    t.expect(normal_form(w).letters() == decode(spec, e.degree, e.code).letters(), "mismatch at " + w.to_string());
    if (letters.size() == 5) return;
    for (const auto& a : alphabet) {
      letters.push_back(a);
      walk();
      letters.pop_back();
    }
  };
  walk();
  return "n=(2,3,5), every word of length <= 5";
}

// Tables with theta_ij(s,t) = (s,t) for equal alphabet sizes.
std::map<std::pair<std::size_t, std::size_t>, ThetaTable> identical_tables(std::size_t k, std::size_t n) {
  std::map<std::pair<std::size_t, std::size_t>, ThetaTable> tables;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ThetaTable table(n, std::vector<std::pair<std::size_t, std::size_t>>(n));
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t u = 0; u < n; ++u) table[s][u] = {s, u};
      }
      tables[{i, j}] = table;
    }
  }
  return tables;
}

// 2. cubic condition on good and perturbed tables.
std::string cubic(Tally& t, std::uint64_t) {
  KGraphSpec standard = KGraphSpec::standard({2, 3, 5});
  t.expect(cubic_check(standard).pass, "standard (2,3,5) failed");
  t.expect(oracle::cubic_confluent(standard), "oracle rejects standard (2,3,5)");

  auto tables = identical_tables(3, 2);
  KGraphSpec same = KGraphSpec::from_tables({2, 2, 2}, tables);
  t.expect(cubic_check(same).pass, "identical tables failed");
  t.expect(oracle::cubic_confluent(same), "oracle rejects identical tables");

  std::swap(tables[{0, 2}][0][0], tables[{0, 2}][0][1]);
  KGraphSpec broken = KGraphSpec::from_tables({2, 2, 2}, tables);
  CubicReport r = cubic_check(broken);
  t.expect(!r.pass && r.witness.has_value(), "perturbed tables passed");
  t.expect(!oracle::cubic_confluent(broken), "oracle accepts perturbed tables");
  if (r.witness) {
    t.expect(r.witness->via_ij_first != r.witness->via_jl_first, "witness routes coincide");
  }
  return "standard (2,3,5), identical (2,2,2), and a transposed (1,3) table";
}

// 3. Zappa-Szep axioms for the odometer.
std::string axioms(Tally& t, std::uint64_t) {
  SpecPtr spec = make_standard({2, 3});
  AxiomReport r = check_zs_axioms(LetterAction::odometer(spec), -30, 30, 4);
  t.expect(r.pass, r.failures.empty() ? "report failed" : r.failures.front().axiom + ": " + r.failures.front().detail);
  t.expect(r.evaluator_mismatches == 0, std::to_string(r.evaluator_mismatches) + " evaluator mismatches");
  return "n=(2,3), g in [-30,30], length <= 4, " + std::to_string(r.cases) + " cases";
}

// 4. minimal common extensions against enumeration.
std::string lcm_dichotomy(Tally& t, std::uint64_t) {
  SpecPtr spec = make_standard({2, 3});
  std::vector<Word> words = words_up_to_length(spec, 3);
  std::size_t with_extension = 0;
  for (const auto& mu : words) {
    for (const auto& nu : words) {
      auto lib = min_common_extensions(mu, nu);
      auto brute = oracle::common_extensions(mu, nu);
      t.expect(lib.size() == brute.size(), "count differs for " + mu.to_string() + ", " + nu.to_string());
      if (brute.empty()) continue;
      ++with_extension;
      t.expect(lib.size() == 1, "not unique for " + mu.to_string() + ", " + nu.to_string());
      Word ext = multiply(mu, lib.front().alpha);
      t.expect(ext == brute.front() && ext == multiply(nu, lib.front().beta) &&
                   ext.degree() == mu.degree().join(nu.degree()),
               "wrong extension for " + mu.to_string() + ", " + nu.to_string());
    }
  }

  SpecPtr spec24 = make_standard({2, 4});
  Word a = Word::letter(spec24, 0, 0), b = Word::letter(spec24, 1, 0);
  t.expect(min_common_extensions(a, b).size() == 2, "(2,4) pair does not have two extensions");
  t.expect(oracle::common_extensions(a, b).size() == 2, "oracle count for (2,4) is not two");
  LcmMonoidVerdict v = is_right_lcm_monoid(spec24);
  t.expect(!v.right_lcm && v.witness.has_value(), "(2,4) reported as right LCM");
  if (v.witness) {
    const auto& w = *v.witness;
    t.expect(w.verified, "witness not verified");
    t.expect(normal_form(w.shifted.first).letters() == normal_form(w.shifted.second).letters(),
             "shifted relation fails");
    t.expect(normal_form(w.zero.first).letters() == normal_form(w.zero.second).letters(), "zero relation fails");
    t.expect(!(w.shifted.first == w.zero.first), "the two common extensions coincide");
  }
  return std::to_string(words.size()) + " words, " + std::to_string(with_extension) +
         " pairs with a common extension; (2,4) witness";
}

// 5. chain ideals against recursive membership.
std::string ideal_oracle(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t chains = 0, nonempty = 0;
  for (std::vector<unsigned long> n : {std::vector<unsigned long>{2, 3}, std::vector<unsigned long>{2, 4}}) {
    SpecPtr spec = make_standard(n);
    std::vector<Word> probe;
    for (const auto& d : degrees_below(Degree(std::vector<unsigned long>{2, 2}))) {
      for (auto& w : words_of_degree(spec, d)) probe.push_back(std::move(w));
    }
    std::vector<ConstructibleIdeal> corpus;
    for (int c = 0; c < 30; ++c) {
      auto chain = oracle::random_chain(rng, spec, 1 + c % 2, 2);
      ConstructibleIdeal x = chain_ideal(chain);
      ++chains;
      if (!x.is_empty()) ++nonempty;
      for (const auto& w : probe) {
        t.expect(x.contains(w) == oracle::chain_member(chain, w), "chain membership differs at " + w.to_string());
      }
      t.expect(canonical_form(x) == x, "canonical_form changed an ideal");
      corpus.push_back(x);
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& x = corpus[i];
      const auto& y = corpus[(i + 1) % corpus.size()];
      const auto& z = corpus[(i + 2) % corpus.size()];
      ConstructibleIdeal xy = intersect(x, y);
      t.expect(xy == intersect(y, x), "intersect not commutative");
      t.expect(intersect(xy, z) == intersect(x, intersect(y, z)), "intersect not associative");
      t.expect(intersect(x, x) == x, "intersect not idempotent");
      for (const auto& w : probe) {
        t.expect(xy.contains(w) == (x.contains(w) && y.contains(w)), "intersection membership differs at " + w.to_string());
      }
    }
  }
  return std::to_string(chains) + " seeded chains over (2,3) and (2,4) (" + std::to_string(nonempty) +
         " nonempty), probed up to degree (2,2)";
}

// 6. simplicity verdicts and the exponent search.
std::string simplicity(Tally& t, std::uint64_t) {
  auto dependent = [](std::vector<unsigned long> n) { return !multiplicative_dependence(n).independent; };
  t.expect(!dependent({2, 3}), "(2,3) dependent");
  t.expect(!dependent({6, 10, 15}), "(6,10,15) dependent");
  DependenceResult r24 = multiplicative_dependence({2, 4});
  t.expect(!r24.independent && r24.certificate && r24.certificate->p == Degree(std::vector<unsigned long>{2, 0}) &&
               r24.certificate->q == Degree(std::vector<unsigned long>{0, 1}),
           "(2,4) certificate is not 2^2 = 4^1");
  for (unsigned long m = 1; m <= 20; ++m) t.expect(dependent({m, m}), "(m,m) independent for m=" + std::to_string(m));

  std::size_t tuples = 0;
  std::vector<unsigned long> n;
  std::function<void(std::size_t, unsigned long)> walk = [&](std::size_t k, unsigned long from) {
    if (n.size() == k) {
      ++tuples;
      DependenceResult lib = multiplicative_dependence(n);
      auto brute = oracle::exponent_collision(n, kDependenceSearchBound);
      std::string tag = Degree(n).to_string();
      t.expect(lib.independent == !brute.has_value(), "verdicts differ for " + tag);
      if (!lib.independent) {
        KGraphSpec spec = KGraphSpec::standard(n);
        bool ok = lib.certificate && lib.certificate->p != lib.certificate->q &&
                  spec.npow(lib.certificate->p) == spec.npow(lib.certificate->q);
        t.expect(ok, "bad certificate for " + tag);
      }
      return;
    }
    for (unsigned long v = from; v <= 20; ++v) {
      n.push_back(v);
      walk(k, v);
      n.pop_back();
    }
  };
  for (std::size_t k = 1; k <= 3; ++k) walk(k, 1);
  return std::to_string(tuples) + " sorted size vectors, search bound " + std::to_string(kDependenceSearchBound);
}

// 7. relation suites and the evaluation window.
std::string relations(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t relations_checked = 0;
  for (std::vector<unsigned long> n : {std::vector<unsigned long>{2, 3}, std::vector<unsigned long>{2, 4}}) {
    KGraphSpec spec = KGraphSpec::standard(n);
    std::string tag = Degree(n).to_string();
    for (auto [name, report] : {std::pair<std::string, RelationReport>{"universal", verify_universal_relations(spec)},
                                {"properties", verify_properties(spec, 3, 5)},
                                {"qn", verify_qn_homomorphism(spec)}}) {
      relations_checked += report.checks.size();
      std::string first;
      for (const auto& c : report.checks) {
        if (!c.pass) {
          first = c.name;
          break;
        }
      }
      t.expect(report.pass(), name + " " + tag + " fails: " + first);
    }
    for (int i = 0; i < 100; ++i) {
      ModelKind kind = i % 2 ? ModelKind::QN : ModelKind::QFZ;
      OpTerm term = oracle::random_term(rng, spec, kind);
      Model model = kind == ModelKind::QFZ ? Model::qfz(spec) : Model::qn(spec);
      auto bad = oracle::semantics_mismatch(term, model, -200, 200);
      t.expect(!bad, "window mismatch for " + term.to_string() + (bad ? " at " + bad->get_str() : ""));
    }
  }
  return std::to_string(relations_checked) + " relations; 200 random terms on [-200,200]";
}

// 8. the kernel witness for (2,4), none for (2,3).
std::string kernel(Tally& t, std::uint64_t) {
  SpecPtr spec24 = make_standard({2, 4});
  KernelWitness w =
      kernel_witness(spec24, Degree(std::vector<unsigned long>{2, 0}), Degree(std::vector<unsigned long>{0, 1}));
  t.expect(w.same_semantics && w.distinct_words, "witness words not separated as expected");
  CanonicalOp times4 = CanonicalOp::from_maps({WeightedMap{AffineMap{1, 0, 0, 4}, ExactScalar(1)}});
  t.expect(w.semantics == times4, "semantics is " + w.semantics.to_string());
  t.expect(w.left.to_string() == "x1:0 x1:0" && w.right.to_string() == "x2:0", "unexpected witness words");

  SpecPtr spec23 = make_standard({2, 3});
  SimplicityVerdict v = is_simple(spec23);
  t.expect(v.simple && !v.certificate && !v.kernel_witness, "(2,3) reported non-simple");
  bool rejected = false;
  try {
    kernel_witness(spec23, Degree(std::vector<unsigned long>{1, 0}), Degree(std::vector<unsigned long>{0, 1}));
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::InvalidCertificate;
  }
  t.expect(rejected, "(2,3) accepted a certificate");
  return "n=(2,4): x1:0 x1:0 and x2:0 both act as m -> 4m; n=(2,3) has no certificate";
}

// 9. product-system identities.
std::string product_system(Tally& t, std::uint64_t) {
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  std::vector<Degree> degrees{Degree(std::vector<unsigned long>{1, 0}), Degree(std::vector<unsigned long>{0, 1}),
                              Degree(std::vector<unsigned long>{1, 1})};
  RelationReport all;
  all.merge(verify_psi_isometry(spec, degrees, -6, 6));
  all.merge(verify_psi_multiplicative(spec, degrees, -6, 6));
  all.merge(verify_left_action(spec, degrees, -6, 6, 3));
  for (std::size_t c = 0; c < spec.rank(); ++c) all.merge(verify_cp_covariance(spec, c));
  for (const auto& c : all.checks) t.expect(c.pass, c.name);
  return "n=(2,3), degrees e1, e2, e1+e2, exponents in [-6,6], " + std::to_string(all.checks.size()) + " identities";
}

// 10. paths, orbits and the contracting set.
std::string topology(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  KGraphSpec spec = KGraphSpec::standard({2, 3});
  auto pick = [&](unsigned long lo, unsigned long hi) { return std::uniform_int_distribution<unsigned long>(lo, hi)(rng); };
  for (int i = 0; i < 100; ++i) {
    unsigned long b = pick(1, 1000);
    Angle z(Rational(pick(0, b - 1), b));
    Degree d(std::vector<unsigned long>{pick(0, 3), pick(0, 3)});
    Degree front(std::vector<unsigned long>{pick(0, d[0]), pick(0, d[1])});
    PathPoint x{z, d};
    auto [head, tail] = factorize_path(spec, x, front);
    t.expect(compose(spec, head, tail) == x, "round trip fails for " + x.to_string());
    auto again = factorize_path(spec, compose(spec, head, tail), head.degree);
    t.expect(again.first == head && again.second == tail, "factorize after compose fails for " + x.to_string());
  }
  Angle v(Rational(0));
  Rational eps(1, 128);
  std::size_t targets = 0;
  for (unsigned long b = 1; b <= 64; ++b) {
    for (unsigned long a = 0; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      ++targets;
      Angle target(Rational(a, b));
      OrbitWitness w = orbit_approx(spec, v, target, eps);
      bool ok = w.distance <= eps && w.distance == circle_distance(w.root, target) &&
                Angle(w.root.value() * Rational(spec.npow(w.p))) == v;
      t.expect(ok, "orbit witness fails for " + target.to_string());
    }
  }
  ContractingWitness c = contracting_witness(spec, Rational(1, 32));
  t.expect(c.pass(), "contracting witness fails at delta 1/32");
  return "100 seeded paths, " + std::to_string(targets) + " orbit targets, delta 1/32";
}

struct Criterion {
  const char* title;
  double limit;
  std::string (*run)(Tally&, std::uint64_t);
};

const Criterion kCriteria[kCriterionCount] = {
    {"rewriting and coding agree", 10, rewriting_coding},
    {"cubic condition", 5, cubic},
    {"zappa-szep axioms", 30, axioms},
    {"lcm dichotomy", 30, lcm_dichotomy},
    {"chain ideals match enumeration", 60, ideal_oracle},
    {"simplicity verdicts", 30, simplicity},
    {"relation suites", 60, relations},
    {"kernel witness", 5, kernel},
    {"product-system identities", 60, product_system},
    {"topological graph", 10, topology},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::Parse, "no criterion " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit = c.limit;
  auto start = std::chrono::steady_clock::now();
  Tally tally;
  try {
    std::string scope = c.run(tally, seed);
    r.pass = tally.pass();
    r.detail = scope + "; " + tally.detail();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.limit);
  std::string status = r.ok() ? "PASS" : "FAIL";
  std::string why = r.pass && !r.within_limit() ? " (over time limit)" : "";
  return "[" + status + "] " + std::to_string(r.id) + " " + r.title + " (" + timing + ")" + why + ": " + r.detail;
}

}  // namespace odograph
