#ifndef KS_CLI_HPP
#define KS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "ks/fixtures.hpp"

namespace ks {

/// Command dispatcher behind the ksgen binary, kept in-process for testing.
/// Subcommands: validate, clifford, construct, center, universal, selftest.
/// Exit codes: 0 success, 1 construction/certificate failure, 2 validation
/// failure, 3 parse/config error (also unknown subcommands and bad flags).
int run_command(const std::vector<std::string>& args, std::ostream& out);

/// The full acceptance suite: one PASS/FAIL line per criterion, returns
/// whether every criterion passed. Deterministic for a fixed seed.
bool acceptance_suite(std::ostream& out, std::uint64_t seed = 0);

/// Resolves a fixture argument: a built-in name (f1, f2, voisin), "-" for
/// standard input, or a path. Throws config_error when unreadable.
Fixture load_fixture(const std::string& arg);

}  // namespace ks

#endif  // KS_CLI_HPP
