#pragma once

#include <ostream>

namespace odograph {

/// Runs the odograph command line. Returns 0 when everything passes, 1 on
/// a verification failure and 2 on usage or spec errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace odograph
