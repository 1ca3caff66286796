#ifndef LAGLAB_TOOLS_COMMANDS_HPP
#define LAGLAB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "laglab/asymptotics.hpp"
#include "laglab/degree_squares.hpp"
#include "laglab/extremal_search.hpp"
#include "report.hpp"

namespace laglab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { json, csv, text };

struct RunConfig {
  double tol = 1e-8;
  int starts = 64;
  int max_iters = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  /// Empty or "-" means stdout.
  std::string output;
  Format format = Format::json;

  SolverConfig solver() const;
};

/// Outcome of a verify command: the document to print and the first failing
/// assertion, if any.
struct Verdict {
  report::Json document;
  /// Human-readable summary for --format text.
  std::string text;
  /// Per-candidate table for --format csv; empty when the command has none.
  std::string csv;
  std::string failure;
  bool passed() const { return failure.empty(); }
};

Verdict verify_ff(int r, std::uint64_t m_min, std::uint64_t m_max, int t, const RunConfig& cfg);
Verdict verify_ak(int t_min, int t_max);
Verdict verify_nikiforov(int r, std::uint64_t m_max, const RunConfig& cfg);
Verdict verify_expansion(int t, int r, std::uint64_t a_max, double constant, const RunConfig& cfg);

/// Entry point of the laglab tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace laglab::cli

#endif  // LAGLAB_TOOLS_COMMANDS_HPP
