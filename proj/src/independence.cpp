#include "odograph/independence.hpp"

#include "odograph/error.hpp"

#include <algorithm>
#include <map>

namespace odograph {

std::vector<std::pair<BigInt, unsigned long>> factorize_integer(const BigInt& m) {
  if (m < 1) throw Error(ErrorKind::NonPositive, "cannot factor " + m.get_str());
  std::vector<std::pair<BigInt, unsigned long>> out;
  BigInt rest = m;
  for (unsigned long p = 2; p <= kTrialDivisionLimit && BigInt(p) * p <= rest; ++p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e) out.push_back({BigInt(p), e});
  }
  if (rest > 1) {
    BigInt limit = kTrialDivisionLimit;
    if (rest > limit * limit) {
      throw Error(ErrorKind::FactorLimit,
                  "cofactor " + rest.get_str() + " of " + m.get_str() + " is beyond trial division");
    }
    out.push_back({rest, 1});
  }
  return out;
}

ExponentMatrix exponent_matrix(const std::vector<unsigned long>& sizes) {
  std::vector<std::map<BigInt, unsigned long>> factored;
  std::vector<BigInt> primes;
  for (auto n : sizes) {
    std::map<BigInt, unsigned long> f;
    for (const auto& [p, e] : factorize_integer(BigInt(n))) {
      f[p] = e;
      primes.push_back(p);
    }
    factored.push_back(std::move(f));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  ExponentMatrix m{primes, {}};
  for (const auto& f : factored) {
    std::vector<unsigned long> row;
    for (const auto& p : primes) {
      auto it = f.find(p);
      row.push_back(it == f.end() ? 0 : it->second);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

DependenceCertificate split(const std::vector<BigInt>& v) {
  DependenceCertificate c{Degree(v.size()), Degree(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) c.p[i] = v[i].get_ui();
    if (v[i] < 0) c.q[i] = BigInt(-v[i]).get_ui();
  }
  return c;
}

}  // namespace

DependenceResult multiplicative_dependence(const std::vector<unsigned long>& sizes) {
  DependenceResult result;
  result.matrix = exponent_matrix(sizes);
  const std::size_t k = sizes.size();
  const std::size_t r = result.matrix.primes.size();

  // Row reduce [rows | I]; a row whose exponent part vanishes carries an
  // integer kernel vector in its identity part.
  std::vector<std::vector<BigInt>> rows(k, std::vector<BigInt>(r + k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < r; ++c) rows[i][c] = result.matrix.rows[i][c];
    rows[i][r + i] = 1;
  }
  std::vector<bool> pivot_row(k, false);
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!pivot_row[i] && rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == k) continue;
    pivot_row[piv] = true;
    ++result.rank;
    for (std::size_t i = 0; i < k; ++i) {
      if (pivot_row[i] || rows[i][c] == 0) continue;
      BigInt a = rows[piv][c], b = rows[i][c];
      BigInt g = 0;
      for (std::size_t x = 0; x < r + k; ++x) {
        rows[i][x] = a * rows[i][x] - b * rows[piv][x];
        g = gcd(g, rows[i][x]);
      }
      if (g > 1) {
        for (auto& x : rows[i]) x /= g;
      }
    }
  }

  std::optional<std::vector<BigInt>> kernel;
  // Special cases first: they give the smallest certificates.
  for (std::size_t i = 0; i < k && !kernel; ++i) {
    if (sizes[i] == 1) {
      std::vector<BigInt> v(k, 0);
      v[i] = 1;
      kernel = v;
    }
  }
  for (std::size_t i = 0; i < k && !kernel; ++i) {
    for (std::size_t j = i + 1; j < k && !kernel; ++j) {
      if (sizes[i] == sizes[j]) {
        std::vector<BigInt> v(k, 0);
        v[i] = 1;
        v[j] = -1;
        kernel = v;
      }
    }
  }
  for (std::size_t i = 0; i < k && !kernel; ++i) {
    if (pivot_row[i]) continue;
    std::vector<BigInt> v(rows[i].begin() + static_cast<std::ptrdiff_t>(r), rows[i].end());
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    for (auto& x : v) x /= g;
    auto lead = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    if (*lead < 0) {
      for (auto& x : v) x = -x;
    }
    kernel = v;
  }

  if (!kernel) return result;
  result.independent = false;
  DependenceCertificate cert = split(*kernel);
  SpecPtr spec = make_standard(sizes);
  if (cert.p == cert.q || spec->npow(cert.p) != spec->npow(cert.q)) {
    throw Error(ErrorKind::Internal, "dependence certificate failed its own check");
  }
  result.certificate = cert;
  return result;
}

SimplicityVerdict is_simple(const SpecPtr& spec) {
  require_standard(*spec);
  SimplicityVerdict verdict;
  DependenceResult dep = multiplicative_dependence(spec->sizes());
  if (dep.independent) return verdict;
  verdict.simple = false;
  verdict.certificate = dep.certificate;
  auto zeros = [&](const Degree& d) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < d.rank(); ++i) letters.insert(letters.end(), d[i], Letter{i, 0});
    return Word(spec, letters);
  };
  verdict.kernel_witness = std::make_pair(zeros(dep.certificate->p), zeros(dep.certificate->q));
  return verdict;
}

}  // namespace odograph
