#include "odograph/verify/oracles.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace odograph::oracle {

std::vector<std::vector<Letter>> reachable_normal_forms(const Word& word) {
  const KGraphSpec& spec = *word.spec();
  std::set<std::vector<Letter>> seen{word.letters()};
  std::deque<std::vector<Letter>> queue{word.letters()};
  std::vector<std::vector<Letter>> normal;
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.front());
    queue.pop_front();
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].color == cur[i + 1].color) continue;
      if (cur[i].color > cur[i + 1].color) sorted = false;
      std::vector<Letter> next = cur;
      auto [a, b] = spec.swap(cur[i], cur[i + 1]);
      next[i] = a;
      next[i + 1] = b;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    if (sorted) normal.push_back(cur);
  }
  std::sort(normal.begin(), normal.end());
  return normal;
}

bool cubic_confluent(const KGraphSpec& spec) {
  auto shared = std::make_shared<const KGraphSpec>(spec);
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t j = i + 1; j < spec.rank(); ++j) {
      for (std::size_t l = j + 1; l < spec.rank(); ++l) {
        for (std::size_t s = 0; s < spec.size(i); ++s) {
          for (std::size_t t = 0; t < spec.size(j); ++t) {
            for (std::size_t u = 0; u < spec.size(l); ++u) {
              Word w(shared, {Letter{l, u}, Letter{j, t}, Letter{i, s}});
              if (reachable_normal_forms(w).size() != 1) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

namespace {

bool has_prefix(const Word& w, const Word& prefix) {
  if (!prefix.degree().leq(w.degree())) return false;
  return factorize(w, prefix.degree()).first == prefix;
}

}  // namespace

std::vector<Word> common_extensions(const Word& mu, const Word& nu) {
  std::vector<Word> out;
  for (const auto& w : words_of_degree(mu.spec(), mu.degree().join(nu.degree()))) {
    if (has_prefix(w, mu) && has_prefix(w, nu)) out.push_back(w);
  }
  return out;
}

bool chain_member(const std::vector<std::pair<Word, Word>>& chain, const Word& w) {
  if (chain.empty()) return true;
  const auto& [mu, nu] = chain.back();
  Word mw = multiply(mu, w);
  if (!has_prefix(mw, nu)) return false;
  Word rest = factorize(mw, nu.degree()).second;
  std::vector<std::pair<Word, Word>> earlier(chain.begin(), chain.end() - 1);
  return chain_member(earlier, rest);
}

namespace {

constexpr std::uint64_t kP1 = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::uint64_t kP2 = 4611686018427387847ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

std::optional<std::pair<Degree, Degree>> exponent_collision(const std::vector<unsigned long>& sizes,
                                                            unsigned long bound) {
  const std::size_t k = sizes.size();
  KGraphSpec spec = KGraphSpec::standard(sizes);
  // Fingerprints mod two large primes; equal values always share one, and
  // every shared fingerprint is confirmed with exact powers.
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (unsigned long e = 0; e <= bound; ++e) {
      powers[i].push_back({a, b});
      a = mulmod(a, sizes[i], kP1);
      b = mulmod(b, sizes[i], kP2);
    }
  }
  struct Entry {
    std::uint64_t h1, h2;
    std::vector<unsigned long> p;
  };
  std::vector<Entry> entries;
  std::vector<unsigned long> p(k, 0);
  while (true) {
    std::uint64_t h1 = 1, h2 = 1;
    for (std::size_t i = 0; i < k; ++i) {
      h1 = mulmod(h1, powers[i][p[i]].first, kP1);
      h2 = mulmod(h2, powers[i][p[i]].second, kP2);
    }
    entries.push_back({h1, h2, p});
    std::size_t i = 0;
    while (i < k && p[i] == bound) p[i++] = 0;
    if (i == k) break;
    ++p[i];
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.h1, a.h2, a.p) < std::tie(b.h1, b.h2, b.p);
  });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size() && entries[j].h1 == entries[i].h1; ++j) {
      if (entries[j].h2 != entries[i].h2) continue;
      Degree a(entries[i].p), b(entries[j].p);
      if (spec.npow(a) == spec.npow(b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::optional<BigInt> uncovered(const SpecPtr& spec, const std::vector<Word>& words) {
  Degree top(spec->rank());
  for (const auto& w : words) top = top.join(w.degree());
  BigInt code = 0;
  for (const auto& w : words_of_degree(spec, top)) {
    bool hit = std::any_of(words.begin(), words.end(), [&](const Word& a) { return has_prefix(w, a); });
    if (!hit) return code;
    ++code;
  }
  return std::nullopt;
}

Word random_word(std::mt19937_64& rng, const SpecPtr& spec, std::size_t length) {
  std::vector<Letter> letters;
  for (std::size_t n = 0; n < length; ++n) {
    std::size_t color = std::uniform_int_distribution<std::size_t>(0, spec->rank() - 1)(rng);
    std::size_t value = std::uniform_int_distribution<std::size_t>(0, spec->size(color) - 1)(rng);
    letters.push_back(Letter{color, value});
  }
  return Word(spec, std::move(letters));
}

std::vector<std::pair<Word, Word>> random_chain(std::mt19937_64& rng, const SpecPtr& spec, std::size_t length,
                                                std::size_t max_word_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_word_length);
  std::vector<std::pair<Word, Word>> chain;
  for (std::size_t i = 0; i < length; ++i) {
    Word mu = random_word(rng, spec, len(rng));
    Word nu = random_word(rng, spec, len(rng));
    chain.emplace_back(std::move(mu), std::move(nu));
  }
  return chain;
}

OpTerm random_term(std::mt19937_64& rng, const KGraphSpec& spec, ModelKind kind) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  OpTerm out;
  int summands = pick(1, 3);
  for (int n = 0; n < summands; ++n) {
    OpTerm word = OpTerm::identity();
    int length = pick(0, 5);
    for (int m = 0; m < length; ++m) {
      bool star = pick(0, 1) == 1;
      Generator g;
      if (kind == ModelKind::QFZ) {
        if (pick(0, 2) == 0) {
          g = star ? Generator::f_star() : Generator::f();
        } else {
          std::size_t color = pick(0, static_cast<int>(spec.rank()) - 1);
          std::size_t letter = pick(0, static_cast<int>(spec.size(color)) - 1);
          g = star ? Generator::g_star(color, letter) : Generator::g(color, letter);
        }
      } else {
        if (pick(0, 2) == 0) {
          g = star ? Generator::u_star() : Generator::u();
        } else {
          unsigned long idx = pick(1, 6);
          g = star ? Generator::s_star(idx) : Generator::s(idx);
        }
      }
      word = word * OpTerm::generator(g);
    }
    ExactScalar c = pick(0, 3) == 0 ? ExactScalar::sqrt(pick(2, 6)) : ExactScalar(pick(-3, 3));
    out = out + word.scaled(c);
  }
  return out;
}

std::optional<BigInt> semantics_mismatch(const OpTerm& term, const Model& model, long lo, long hi) {
  CanonicalOp op = semantics(term, model);
  for (long m = lo; m <= hi; ++m) {
    if (op.apply(m) != eval(term, m, model)) return BigInt(m);
  }
  return std::nullopt;
}

}  // namespace odograph::oracle
