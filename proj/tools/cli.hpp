#pragma once

#include <iosfwd>

namespace pegsol::cli {

// Run the command-line driver against explicit streams so tests can feed
// batch input and capture output.  Returns the process exit code:
// 0 success, 2 usage or parse error, 3 internal invariant violation.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace pegsol::cli
