#pragma once

// Command-line front end.  Every subcommand builds one JSON document (or CSV
// table) with a fixed field order; numbers that can grow without bound are
// emitted as decimal strings.
//
// Exit codes: 0 ok, 1 selfcheck or internal failure, 2 invalid parameters,
// 3 unsupported ring, 4 budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cuspk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitUnsupportedRing = 3;
inline constexpr int kExitBudget = 4;

struct RunConfig {
  std::string subcommand;  // kgroup | tcminus | tp | tower | units | selfcheck

  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  // Degree 2r for each listed r, in the order given after sorting.
  std::vector<std::int64_t> r_values;
  // kgroup: query K_degree directly (odd degrees are trivial).
  std::optional<std::int64_t> degree;

  std::string ring;
  std::optional<std::vector<std::int64_t>> modulus;

  std::string form = "both";  // product | quotient | both
  std::int64_t truncate = 0;  // M for tcminus/tp, N for tower, N for units
  std::string format = "json";
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::optional<std::string> out;

  // tower
  std::int64_t m_prime = 1;
  int tower_case = 1;
  bool oracle = false;

  // units
  std::string check = "pth-root";  // pth-root | unit | group | torsion
  std::string target;
  std::int64_t power = 1;  // k in x^{p^k} for the torsion check
};

// Parses argv with CLI11.  On a parse error or --help writes to err/out and
// returns the exit code to use; returns nullopt when the config is ready.
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err);

// Emits the document to `out` (or config.out) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace cuspk
