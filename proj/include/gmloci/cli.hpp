#pragma once

#include <ostream>

namespace gmloci {

// Entry point of the `gmloci` tool. Exit codes: 0 success, 1 verification
// failure, 2 input or usage error, 3 resource limit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmloci
