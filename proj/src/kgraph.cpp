#include "odograph/kgraph.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace odograph {

// ---------------------------------------------------------------- Degree

Degree Degree::unit(std::size_t rank, std::size_t color) {
  Degree d(rank);
  d.parts_[color] = 1;
  return d;
}

unsigned long Degree::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0UL);
}

bool Degree::leq(const Degree& other) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

Degree Degree::join(const Degree& other) const {
  Degree d(rank());
  for (std::size_t i = 0; i < parts_.size(); ++i) d.parts_[i] = std::max(parts_[i], other.parts_[i]);
  return d;
}

Degree Degree::meet(const Degree& other) const {
  Degree d(rank());
  for (std::size_t i = 0; i < parts_.size(); ++i) d.parts_[i] = std::min(parts_[i], other.parts_[i]);
  return d;
}

Degree Degree::operator+(const Degree& other) const {
  Degree d(rank());
  for (std::size_t i = 0; i < parts_.size(); ++i) d.parts_[i] = parts_[i] + other.parts_[i];
  return d;
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.leq(*this)) {
    throw Error(ErrorKind::DegreeOutOfRange, "cannot subtract " + other.to_string() + " from " + to_string());
  }
  Degree d(rank());
  for (std::size_t i = 0; i < parts_.size(); ++i) d.parts_[i] = parts_[i] - other.parts_[i];
  return d;
}

std::string Degree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

// ------------------------------------------------------------ KGraphSpec

namespace {

std::pair<std::size_t, std::size_t> standard_theta(unsigned long ni, unsigned long nj, std::size_t s,
                                                   std::size_t t) {
  unsigned long total = s + t * ni;
  return {total % nj, total / nj};
}

void check_sizes(const std::vector<unsigned long>& sizes) {
  if (sizes.empty()) throw Error(ErrorKind::Parse, "a k-graph needs rank k >= 1");
  for (auto n : sizes) {
    if (n < 1) throw Error(ErrorKind::NonPositive, "alphabet sizes must be >= 1");
  }
}

}  // namespace

std::size_t KGraphSpec::pair_index(std::size_t i, std::size_t j) const {
  // Row-major over the strict upper triangle.
  std::size_t k = rank();
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

void KGraphSpec::build_inverses() {
  std::size_t k = rank();
  inverse_.assign(forward_.size(), {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto idx = pair_index(i, j);
      unsigned long ni = sizes_[i], nj = sizes_[j];
      inverse_[idx].assign(ni * nj, {0, 0});
      for (std::size_t s = 0; s < ni; ++s) {
        for (std::size_t t = 0; t < nj; ++t) {
          auto [tp, sp] = forward_[idx][s * nj + t];
          inverse_[idx][tp * ni + sp] = {s, t};
        }
      }
    }
  }
}

KGraphSpec KGraphSpec::standard(std::vector<unsigned long> sizes) {
  check_sizes(sizes);
  KGraphSpec spec;
  spec.sizes_ = std::move(sizes);
  spec.flavor_ = ThetaFlavor::StandardProduct;
  spec.standard_theta_ = true;
  std::size_t k = spec.rank();
  spec.forward_.assign(k * (k - 1) / 2, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto& tab = spec.forward_[spec.pair_index(i, j)];
      unsigned long ni = spec.sizes_[i], nj = spec.sizes_[j];
      tab.resize(ni * nj);
      for (std::size_t s = 0; s < ni; ++s) {
        for (std::size_t t = 0; t < nj; ++t) tab[s * nj + t] = standard_theta(ni, nj, s, t);
      }
    }
  }
  spec.build_inverses();
  return spec;
}

ThetaReport KGraphSpec::check_tables(const std::vector<unsigned long>& sizes,
                                     const std::map<std::pair<std::size_t, std::size_t>, ThetaTable>& tables) {
  ThetaReport report;
  report.matches_standard_formula = true;
  std::size_t k = sizes.size();
  for (const auto& [key, tab] : tables) {
    if (key.first >= key.second || key.second >= k) {
      report.valid = false;
      report.problems.push_back("table for unexpected pair (" + std::to_string(key.first + 1) + "," +
                                std::to_string(key.second + 1) + ")");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      auto it = tables.find({i, j});
      if (it == tables.end()) {
        report.valid = false;
        report.matches_standard_formula = false;
        report.problems.push_back("missing table " + tag);
        continue;
      }
      const ThetaTable& tab = it->second;
      unsigned long ni = sizes[i], nj = sizes[j];
      bool shape_ok = tab.size() == ni;
      for (const auto& row : tab) shape_ok = shape_ok && row.size() == nj;
      if (!shape_ok) {
        report.valid = false;
        report.matches_standard_formula = false;
        report.problems.push_back("table " + tag + " must be " + std::to_string(ni) + "x" + std::to_string(nj));
        continue;
      }
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> preimages;
      for (std::size_t s = 0; s < ni; ++s) {
        for (std::size_t t = 0; t < nj; ++t) {
          auto image = tab[s][t];
          if (image.first >= nj || image.second >= ni) {
            report.valid = false;
            report.problems.push_back("table " + tag + " entry out of range");
            continue;
          }
          preimages[image].push_back({s, t});
          if (image != standard_theta(ni, nj, s, t)) report.matches_standard_formula = false;
        }
      }
      for (const auto& [image, sources] : preimages) {
        if (sources.size() > 1) {
          report.valid = false;
          report.collisions.push_back(ThetaCollision{i, j, sources, image});
        }
      }
    }
  }
  if (!report.valid) report.matches_standard_formula = false;
  return report;
}

KGraphSpec KGraphSpec::from_tables(std::vector<unsigned long> sizes,
                                   const std::map<std::pair<std::size_t, std::size_t>, ThetaTable>& tables) {
  check_sizes(sizes);
  ThetaReport report = check_tables(sizes, tables);
  if (!report.valid) {
    std::string msg = "theta tables are not bijections";
    if (!report.collisions.empty()) {
      const auto& c = report.collisions.front();
      msg += ": table (" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + ") sends";
      for (auto [s, t] : c.sources) msg += " (" + std::to_string(s) + "," + std::to_string(t) + ")";
      msg += " to (" + std::to_string(c.image.first) + "," + std::to_string(c.image.second) + ")";
    } else if (!report.problems.empty()) {
      msg += ": " + report.problems.front();
    }
    throw Error(ErrorKind::NotBijective, msg);
  }
  KGraphSpec spec;
  spec.sizes_ = std::move(sizes);
  spec.flavor_ = ThetaFlavor::ExplicitTables;
  spec.standard_theta_ = report.matches_standard_formula;
  std::size_t k = spec.rank();
  spec.forward_.assign(k * (k - 1) / 2, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const ThetaTable& tab = tables.at({i, j});
      auto& flat = spec.forward_[spec.pair_index(i, j)];
      unsigned long nj = spec.sizes_[j];
      flat.resize(spec.sizes_[i] * nj);
      for (std::size_t s = 0; s < spec.sizes_[i]; ++s) {
        for (std::size_t t = 0; t < nj; ++t) flat[s * nj + t] = tab[s][t];
      }
    }
  }
  spec.build_inverses();
  return spec;
}

std::pair<std::size_t, std::size_t> KGraphSpec::theta(std::size_t i, std::size_t j, std::size_t s,
                                                      std::size_t t) const {
  return forward_[pair_index(i, j)][s * sizes_[j] + t];
}

std::pair<std::size_t, std::size_t> KGraphSpec::theta_inverse(std::size_t i, std::size_t j, std::size_t t_prime,
                                                              std::size_t s_prime) const {
  return inverse_[pair_index(i, j)][t_prime * sizes_[i] + s_prime];
}

std::pair<Letter, Letter> KGraphSpec::swap(const Letter& a, const Letter& b) const {
  if (a.color < b.color) {
    auto [tp, sp] = theta(a.color, b.color, a.value, b.value);
    return {Letter{b.color, tp}, Letter{a.color, sp}};
  }
  if (a.color > b.color) {
    auto [s, t] = theta_inverse(b.color, a.color, a.value, b.value);
    return {Letter{b.color, s}, Letter{a.color, t}};
  }
  throw Error(ErrorKind::Internal, "letters of one color never commute");
}

BigInt KGraphSpec::npow(const Degree& degree) const {
  BigInt result = 1;
  for (std::size_t i = 0; i < rank(); ++i) result *= pow(BigInt(sizes_[i]), degree[i]);
  return result;
}

ThetaTable KGraphSpec::table(std::size_t i, std::size_t j) const {
  ThetaTable tab(sizes_[i], std::vector<std::pair<std::size_t, std::size_t>>(sizes_[j]));
  for (std::size_t s = 0; s < sizes_[i]; ++s) {
    for (std::size_t t = 0; t < sizes_[j]; ++t) tab[s][t] = theta(i, j, s, t);
  }
  return tab;
}

bool KGraphSpec::operator==(const KGraphSpec& other) const {
  return sizes_ == other.sizes_ && forward_ == other.forward_;
}

SpecPtr make_standard(std::vector<unsigned long> sizes) {
  return std::make_shared<const KGraphSpec>(KGraphSpec::standard(std::move(sizes)));
}

// ------------------------------------------------------------------ Word

Word::Word(SpecPtr spec, std::vector<Letter> letters)
    : spec_(std::move(spec)), letters_(std::move(letters)), degree_(spec_->rank()) {
  for (const auto& l : letters_) {
    if (l.color >= spec_->rank()) {
      throw Error(ErrorKind::LetterOutOfRange, "generator index " + std::to_string(l.color + 1) + " exceeds rank " +
                                                   std::to_string(spec_->rank()));
    }
    if (l.value >= spec_->size(l.color)) {
      throw Error(ErrorKind::LetterOutOfRange, "letter " + std::to_string(l.value) + " not in [" +
                                                   std::to_string(spec_->size(l.color)) + "] for x" +
                                                   std::to_string(l.color + 1));
    }
    ++degree_[l.color];
  }
}

Word Word::letter(SpecPtr spec, std::size_t color, std::size_t value) {
  return Word(std::move(spec), {Letter{color, value}});
}

bool Word::is_normal() const {
  return std::is_sorted(letters_.begin(), letters_.end(),
                        [](const Letter& a, const Letter& b) { return a.color < b.color; });
}

bool Word::operator==(const Word& other) const {
  if (!(*spec_ == *other.spec_)) return false;
  if (degree_ != other.degree_) return false;
  return normal_form(*this).letters_ == normal_form(other).letters_;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.color + 1) + ":" + std::to_string(l.value);
  }
  return out;
}

// -------------------------------------------------------------- operations

void require_same_spec(const SpecPtr& a, const SpecPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::SpecMismatch, "words belong to different k-graphs");
}

void require_standard(const KGraphSpec& spec) {
  if (!spec.has_standard_theta()) {
    throw Error(ErrorKind::UnsupportedFlavor, "operation needs the standard-product theta");
  }
}

ThetaReport validate_theta(const KGraphSpec& spec) {
  std::map<std::pair<std::size_t, std::size_t>, ThetaTable> tables;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t j = i + 1; j < spec.rank(); ++j) tables[{i, j}] = spec.table(i, j);
  }
  ThetaReport report = KGraphSpec::check_tables(spec.sizes(), tables);
  if (spec.flavor() == ThetaFlavor::StandardProduct && !report.matches_standard_formula) {
    report.valid = false;
    report.problems.push_back("standard-product spec does not match the closed-form theta");
  }
  return report;
}

CubicReport cubic_check(const KGraphSpec& spec) {
  CubicReport report;
  std::size_t k = spec.rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        for (std::size_t s = 0; s < spec.size(i); ++s) {
          for (std::size_t t = 0; t < spec.size(j); ++t) {
            for (std::size_t u = 0; u < spec.size(l); ++u) {
              ++report.triples_checked;
              std::vector<Letter> a{{i, s}, {j, t}, {l, u}};
              std::vector<Letter> b = a;
              // (i,j), then (i,l), then (j,l)
              std::tie(a[0], a[1]) = spec.swap(a[0], a[1]);
              std::tie(a[1], a[2]) = spec.swap(a[1], a[2]);
              std::tie(a[0], a[1]) = spec.swap(a[0], a[1]);
              // (j,l), then (i,l), then (i,j)
              std::tie(b[1], b[2]) = spec.swap(b[1], b[2]);
              std::tie(b[0], b[1]) = spec.swap(b[0], b[1]);
              std::tie(b[1], b[2]) = spec.swap(b[1], b[2]);
              if (a != b && report.pass) {
                report.pass = false;
                report.witness = CubicWitness{i, j, l, s, t, u, a, b};
              }
            }
          }
        }
      }
    }
  }
  return report;
}

namespace {

// Stable bubble sort by key with theta swaps; equal keys never swap.
template <typename KeyFn>
std::vector<Letter> theta_sort(const KGraphSpec& spec, std::vector<Letter> letters, KeyFn key) {
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (key(p + 1, letters[p + 1]) < key(p, letters[p])) {
        std::tie(letters[p], letters[p + 1]) = spec.swap(letters[p], letters[p + 1]);
        swapped = true;
      }
    }
  }
  return letters;
}

std::vector<Letter> blocked_letters(const KGraphSpec& spec, const Degree& degree, BigInt code) {
  std::vector<Letter> letters;
  letters.reserve(degree.total());
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    BigInt n = spec.size(i);
    for (unsigned long r = 0; r < degree[i]; ++r) {
      BigInt digit = code % n;
      code /= n;
      letters.push_back(Letter{i, digit.get_ui()});
    }
  }
  return letters;
}

}  // namespace

Word normal_form(const Word& word) {
  if (word.is_normal()) return word;
  auto sorted = theta_sort(*word.spec(), word.letters(),
                           [](std::size_t, const Letter& l) { return l.color; });
  return Word(word.spec(), std::move(sorted));
}

Word normal_form_random_schedule(const Word& word, std::mt19937_64& rng) {
  std::vector<Letter> letters = word.letters();
  const KGraphSpec& spec = *word.spec();
  for (;;) {
    std::vector<std::size_t> inverted;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (letters[p].color > letters[p + 1].color) inverted.push_back(p);
    }
    if (inverted.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, inverted.size() - 1);
    std::size_t p = inverted[pick(rng)];
    std::tie(letters[p], letters[p + 1]) = spec.swap(letters[p], letters[p + 1]);
  }
  return Word(word.spec(), std::move(letters));
}

Encoded encode(const Word& word) {
  const KGraphSpec& spec = *word.spec();
  require_standard(spec);
  Encoded out{Degree(spec.rank()), 0};
  BigInt weight = 1;
  for (const auto& l : word.letters()) {
    out.code += weight * l.value;
    weight *= spec.size(l.color);
    ++out.degree[l.color];
  }
  return out;
}

Word decode(SpecPtr spec, const Degree& degree, const BigInt& code) {
  require_standard(*spec);
  if (degree.rank() != spec->rank()) throw Error(ErrorKind::DegreeOutOfRange, "degree has the wrong rank");
  if (code < 0 || code >= spec->npow(degree)) {
    throw Error(ErrorKind::CodeOutOfRange, "code " + code.get_str() + " outside [0, " + spec->npow(degree).get_str() +
                                               ") for degree " + degree.to_string());
  }
  auto letters = blocked_letters(*spec, degree, code);
  return Word(std::move(spec), std::move(letters));
}

Word multiply(const Word& left, const Word& right) {
  require_same_spec(left.spec(), right.spec());
  std::vector<Letter> letters = left.letters();
  letters.insert(letters.end(), right.letters().begin(), right.letters().end());
  return normal_form(Word(left.spec(), std::move(letters)));
}

std::pair<Word, Word> factorize(const Word& word, const Degree& front) {
  if (front.rank() != word.degree().rank() || !front.leq(word.degree())) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "front degree " + front.to_string() + " not below " + word.degree().to_string());
  }
  Word normal = normal_form(word);
  // The r-th letter of color i goes to the front part iff r < front[i].
  std::vector<int> group(normal.length());
  std::vector<unsigned long> seen(front.rank(), 0);
  for (std::size_t p = 0; p < normal.length(); ++p) {
    auto c = normal.letters()[p].color;
    group[p] = seen[c]++ < front[c] ? 0 : 1;
  }
  // Keys travel with the letters, so track them alongside.
  std::vector<std::pair<int, std::size_t>> keys(normal.length());
  for (std::size_t p = 0; p < normal.length(); ++p) keys[p] = {group[p], normal.letters()[p].color};
  std::vector<Letter> letters = normal.letters();
  const KGraphSpec& spec = *word.spec();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (keys[p + 1] < keys[p]) {
        std::tie(letters[p], letters[p + 1]) = spec.swap(letters[p], letters[p + 1]);
        std::swap(keys[p], keys[p + 1]);
        swapped = true;
      }
    }
  }
  std::size_t cut = front.total();
  std::vector<Letter> head(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<Letter> tail(letters.begin() + static_cast<std::ptrdiff_t>(cut), letters.end());
  return {Word(word.spec(), std::move(head)), Word(word.spec(), std::move(tail))};
}

std::vector<Word> words_of_degree(const SpecPtr& spec, const Degree& degree) {
  BigInt count = spec->npow(degree);
  std::vector<Word> out;
  out.reserve(count.get_ui());
  for (BigInt c = 0; c < count; ++c) out.emplace_back(spec, blocked_letters(*spec, degree, c));
  return out;
}

std::vector<Degree> degrees_up_to_length(std::size_t rank, unsigned long max_length) {
  std::vector<Degree> out;
  for (unsigned long total = 0; total <= max_length; ++total) {
    // Compositions of `total` into `rank` parts, lexicographic.
    Degree d(rank);
    auto rec = [&](auto&& self, std::size_t i, unsigned long left) -> void {
      if (i + 1 == rank) {
        d[i] = left;
        out.push_back(d);
        return;
      }
      for (unsigned long v = 0; v <= left; ++v) {
        d[i] = v;
        self(self, i + 1, left - v);
      }
    };
    rec(rec, 0, total);
  }
  return out;
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  Degree d(bound.rank());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == bound.rank()) {
      out.push_back(d);
      return;
    }
    for (unsigned long v = 0; v <= bound[i]; ++v) {
      d[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace odograph
