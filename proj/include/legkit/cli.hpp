#pragma once

#include <iosfwd>

namespace legkit {

// exit codes: 0 success, 1 domain error, 2 usage error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace legkit
