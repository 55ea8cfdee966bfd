#pragma once

#include <iosfwd>

namespace bellift::cli {

/// Exit codes: 0 ok, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bellift::cli
