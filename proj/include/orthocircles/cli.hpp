#pragma once

#include <iosfwd>

namespace orthocircles {

/// Entry point of the `orthocircles` tool. Exit codes: 0 success, 1 a report
/// contains a violation or failure, 2 usage, parse or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orthocircles
