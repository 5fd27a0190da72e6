#pragma once

#include <iosfwd>

namespace strata::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, consistency_failure = 3 };

/// Runs one command line. The envelope (or table) goes to `out`, usage text
/// and CLI11 messages to `err`; `in` backs "classify -".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
