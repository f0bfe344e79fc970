#include "odograph/verify/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// Prints one line per criterion; exits nonzero if any fails or overruns.
int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  int failed = 0;
  for (int id = 1; id <= odograph::kCriterionCount; ++id) {
    odograph::CriterionResult r = odograph::run_criterion(id, seed);
    std::cout << odograph::format_result(r) << std::endl;
    if (!r.ok()) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
