#pragma once

#include <iosfwd>

namespace calogero::cli {

// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kNumericalFailure = 2;
inline constexpr int kVerificationFailure = 3;

/// Runs one subcommand (lax, spectral, map, evolve, scatter, verify). State
/// input comes from the positional file argument, or from `in` when it is
/// absent or "-". Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace calogero::cli
