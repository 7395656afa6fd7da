#pragma once

#include <iosfwd>

namespace emb7::cli {

/// Full command-line entry point; parses argv, dispatches to the
/// classify / s1s3 / verify subcommands and returns the process exit code.
///
/// Exit codes are a stable contract:
///   0 success, 1 verifier suite failure, 2 validation error,
///   3 dimension mismatch, 4 malformed psi table, 5 enumeration budget
///   exhausted without sampling permission.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace emb7::cli
