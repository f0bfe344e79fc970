#include "odograph/selfsim.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace odograph {

namespace {

void check_letter(const KGraphSpec& spec, std::size_t color, std::size_t s) {
  if (color >= spec.rank() || s >= spec.size(color)) {
    throw Error(ErrorKind::LetterOutOfRange, "letter x" + std::to_string(color + 1) + ":" + std::to_string(s) +
                                                 " is outside the alphabet");
  }
}

std::string show(const std::vector<Letter>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.color + 1) + ":" + std::to_string(l.value);
  }
  return out.empty() ? "()" : out;
}

}  // namespace

LetterAction LetterAction::odometer(SpecPtr spec) {
  LetterAction a;
  a.odometer_ = true;
  a.table_.resize(spec->rank());
  for (std::size_t i = 0; i < spec->rank(); ++i) {
    for (std::size_t s = 0; s < spec->size(i); ++s) {
      bool wraps = s + 1 == spec->size(i);
      a.table_[i].push_back({wraps ? 0 : s + 1, BigInt(wraps ? 1 : 0)});
    }
  }
  a.spec_ = std::move(spec);
  return a;
}

LetterAction LetterAction::from_table(SpecPtr spec, Table table) {
  if (table.size() != spec->rank()) {
    throw Error(ErrorKind::Parse, "letter action needs one row per color");
  }
  for (std::size_t i = 0; i < spec->rank(); ++i) {
    if (table[i].size() != spec->size(i)) {
      throw Error(ErrorKind::Parse, "letter action row " + std::to_string(i + 1) + " has the wrong length");
    }
    std::vector<bool> hit(spec->size(i), false);
    for (const auto& [image, r] : table[i]) {
      if (image >= spec->size(i) || hit[image]) {
        throw Error(ErrorKind::NotBijective,
                    "letter action on color " + std::to_string(i + 1) + " is not a permutation");
      }
      hit[image] = true;
    }
  }
  LetterAction a;
  a.spec_ = std::move(spec);
  a.table_ = std::move(table);
  return a;
}

std::pair<std::size_t, BigInt> LetterAction::apply(const BigInt& g, std::size_t color, std::size_t s) const {
  check_letter(*spec_, color, s);
  if (odometer_) {
    BigInt n = spec_->size(color);
    BigInt total = BigInt(s) + g;
    return {floor_mod(total, n).get_ui(), floor_div(total, n)};
  }
  // Walk the cycle of s. With c its length and S the sum of restrictions
  // along it, (qc + r)|_x = qS + r|_x.
  const auto& row = table_[color];
  std::vector<std::size_t> cycle{s};
  BigInt cycle_sum = row[s].second;
  for (std::size_t y = row[s].first; y != s; y = row[y].first) {
    cycle.push_back(y);
    cycle_sum += row[y].second;
  }
  BigInt c = cycle.size();
  BigInt q = floor_div(g, c);
  unsigned long r = floor_mod(g, c).get_ui();
  BigInt rest = q * cycle_sum;
  for (unsigned long step = 0; step < r; ++step) rest += row[cycle[step]].second;
  return {cycle[r], rest};
}

ActionResult act_letter(const SpecPtr& spec, const BigInt& g, std::size_t color, std::size_t s) {
  check_letter(*spec, color, s);
  BigInt n = spec->size(color);
  BigInt total = BigInt(s) + g;
  return {Word::letter(spec, color, floor_mod(total, n).get_ui()), floor_div(total, n)};
}

CompatibilityReport check_compatibility(const LetterAction& action) {
  CompatibilityReport report;
  const KGraphSpec& spec = *action.spec();
  BigInt one = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t j = i + 1; j < spec.rank(); ++j) {
      for (std::size_t s = 0; s < spec.size(i); ++s) {
        for (std::size_t t = 0; t < spec.size(j); ++t) {
          ++report.squares_checked;
          auto [a, ra] = action.apply(one, i, s);
          auto [b, rb] = action.apply(ra, j, t);
          auto [tp, sp] = spec.theta(i, j, s, t);
          auto [c, rc] = action.apply(one, j, tp);
          auto [d, rd] = action.apply(rc, i, sp);
          // x^i_a x^j_b and x^j_c x^i_d are equal iff theta(a,b) = (c,d).
          bool same_word = spec.theta(i, j, a, b) == std::make_pair(c, d);
          if ((!same_word || rb != rd) && report.pass) {
            report.pass = false;
            report.witness = CompatibilityWitness{i, s, j, t, {{i, a}, {j, b}}, {{j, c}, {i, d}}, rb, rd};
          }
        }
      }
    }
  }
  return report;
}

ActionResult act_recursive(const LetterAction& action, const BigInt& g, const Word& word) {
  Word normal = normal_form(word);
  std::vector<Letter> image;
  image.reserve(normal.length());
  BigInt current = g;
  for (const auto& l : normal.letters()) {
    auto [value, rest] = action.apply(current, l.color, l.value);
    image.push_back(Letter{l.color, value});
    current = rest;
  }
  return {Word(word.spec(), std::move(image)), current};
}

ActionResult act_closed_form(const BigInt& g, const Word& word) {
  Encoded e = encode(word);
  BigInt npow = word.spec()->npow(e.degree);
  BigInt shifted = e.code + g;
  return {decode(word.spec(), e.degree, floor_mod(shifted, npow)), floor_div(shifted, npow)};
}

ActionResult act(const BigInt& g, const Word& word) {
  if (word.spec()->has_standard_theta()) return act_closed_form(g, word);
  return act(LetterAction::odometer(word.spec()), g, word);
}

ActionResult act(const LetterAction& action, const BigInt& g, const Word& word) {
  require_same_spec(action.spec(), word.spec());
  if (action.is_odometer() && word.spec()->has_standard_theta()) return act_closed_form(g, word);
  auto report = check_compatibility(action);
  if (!report.pass) {
    const auto& w = *report.witness;
    throw Error(ErrorKind::IncompatibleAction,
                "letter action does not extend: square x" + std::to_string(w.i + 1) + ":" + std::to_string(w.s) +
                    " x" + std::to_string(w.j + 1) + ":" + std::to_string(w.t) + " gives " + show(w.left) + " vs " +
                    show(w.right));
  }
  return act_recursive(action, g, word);
}

BigInt restriction(const BigInt& g, const Word& word) { return act(g, word).restriction; }

ZSElement zs_multiply(const ZSElement& a, const ZSElement& b) {
  require_same_spec(a.word.spec(), b.word.spec());
  ActionResult moved = act(a.g, b.word);
  return {multiply(a.word, moved.image), moved.restriction + b.g};
}

bool AxiomReport::failed(const std::string& axiom) const {
  for (const auto& f : failures) {
    if (f.axiom == axiom) return true;
  }
  return false;
}

AxiomReport check_zs_axioms(const LetterAction& action, long g_min, long g_max, unsigned long max_length) {
  AxiomReport report;
  const SpecPtr& spec = action.spec();
  bool closed_form = action.is_odometer() && spec->has_standard_theta();

  std::vector<Word> words;
  for (const auto& d : degrees_up_to_length(spec->rank(), max_length)) {
    for (auto& w : words_of_degree(spec, d)) words.push_back(std::move(w));
  }
  std::vector<BigInt> gs;
  for (long g = g_min; g <= g_max; ++g) gs.emplace_back(g);

  std::map<std::string, AxiomFailure> first;
  auto record = [&](const std::string& axiom, bool ok, const std::function<std::string()>& detail) {
    ++report.cases;
    if (!ok && !first.count(axiom)) first[axiom] = AxiomFailure{axiom, detail()};
  };
  auto act_on = [&](const BigInt& g, const Word& w) { return act_recursive(action, g, w); };
  auto same = [](const Word& a, const Word& b) { return a.same_letters(b) || a == b; };

  Word empty = Word::empty(spec);
  for (const auto& g : gs) {
    auto e = act_on(g, empty);
    record("B3", e.image.is_empty(), [&] { return "g=" + g.get_str(); });
    record("B5", e.restriction == g, [&] { return "g=" + g.get_str(); });
  }
  // Actions of every g + h on every word, indexed for the B2/B8 sweep.
  std::map<std::vector<Letter>, std::size_t> index;
  for (std::size_t w = 0; w < words.size(); ++w) index[words[w].letters()] = w;
  long lo = std::min(2 * g_min, g_min), hi = std::max(2 * g_max, g_max);
  std::vector<std::vector<ActionResult>> cache(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (long g = lo; g <= hi; ++g) cache[w].push_back(act_on(g, words[w]));
  }
  auto cached = [&](std::size_t w, long g) -> const ActionResult& { return cache[w][g - lo]; };

  for (std::size_t w = 0; w < words.size(); ++w) {
    const Word& u = words[w];
    const auto& zero = act_on(0, u);
    record("B1", same(zero.image, u), [&] { return "u=" + show(u.letters()); });
    record("B7", zero.restriction == 0, [&] { return "u=" + show(u.letters()); });
    for (long g = g_min; g <= g_max; ++g) {
      if (closed_form) {
        auto cf = act_closed_form(g, u);
        const auto& gu = cached(w, g);
        if (!same(cf.image, gu.image) || cf.restriction != gu.restriction) ++report.evaluator_mismatches;
      }
      for (long h = g_min; h <= g_max; ++h) {
        const auto& hu = cached(w, h);
        const auto& sum = cached(w, g + h);
        auto it = index.find(hu.image.letters());
        ActionResult g_hu = it == index.end() ? act_on(g, hu.image) : cached(it->second, g);
        auto tag = [&] {
          return "g=" + std::to_string(g) + " h=" + std::to_string(h) + " u=" + show(u.letters());
        };
        record("B2", same(sum.image, g_hu.image), tag);
        record("B8", sum.restriction == g_hu.restriction + hu.restriction, tag);
      }
    }
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.length() + v.length() > max_length) continue;
      Word uv(spec, [&] {
        auto l = u.letters();
        l.insert(l.end(), v.letters().begin(), v.letters().end());
        return l;
      }());
      for (const auto& g : gs) {
        auto whole = act_on(g, uv);
        auto gu = act_on(g, u);
        auto rest_v = act_on(gu.restriction, v);
        auto tag = [&] { return "g=" + g.get_str() + " u=" + show(u.letters()) + " v=" + show(v.letters()); };
        std::vector<Letter> joined = gu.image.letters();
        joined.insert(joined.end(), rest_v.image.letters().begin(), rest_v.image.letters().end());
        record("B4", same(whole.image, Word(spec, joined)), tag);
        record("B6", whole.restriction == rest_v.restriction, tag);
      }
    }
  }
  for (const auto& [axiom, failure] : first) report.failures.push_back(failure);
  report.pass = report.failures.empty() && report.evaluator_mismatches == 0;
  return report;
}

BigInt solve_restriction(const Word& word, const BigInt& l) {
  Encoded e = encode(word);
  BigInt answer = l * word.spec()->npow(e.degree) - e.code;
  if (restriction(answer, word) != l) {
    throw Error(ErrorKind::Internal, "solved restriction failed its own check");
  }
  return answer;
}

}  // namespace odograph
