#pragma once

#include <ostream>

namespace extlat {

// Exit codes: 0 success, 1 theorem violation, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extlat
