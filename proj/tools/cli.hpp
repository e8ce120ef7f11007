#pragma once

#include <ostream>

namespace sectorlab {

/// Exit codes: 0 all pass, 1 counterexample or failed check, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sectorlab
