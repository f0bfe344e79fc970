#pragma once

// End-to-end acceptance runs. Each criterion is a fixed, seeded workload
// with a wall-clock limit; the CLI's verify-all and the acceptance test
// binary both print these results.

#include <cstdint>
#include <string>
#include <vector>

namespace odograph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool within_limit() const { return seconds <= limit; }
  bool ok() const { return pass && within_limit(); }
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion id in [1, kCriterionCount]; exceptions become failures.
CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "[PASS] 3 zappa-szep axioms (4.12 s / 30 s): detail"
std::string format_result(const CriterionResult& r);

/// Exponent bound for the brute-force dependence search. 8 is the smallest
/// that finds every dependence with entries <= 20 and k <= 3: n = (3,16,18)
/// has only 3^8 16 = 18^4 and its multiples.
inline constexpr unsigned long kDependenceSearchBound = 8;

}  // namespace odograph
