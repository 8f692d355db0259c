#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gitsolve/gitsolver.hpp"
#include "gitsolve/limits.hpp"
#include "gitsolve/rootdata.hpp"

namespace gitsolve::cli {

enum class Format { Text, Json };

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kResourceGuard = 3,
};

struct RunConfig {
  rootdata::DynkinType group;
  std::string weight_text;
  solver::Loci loci;
  bool weyl_opt = false;
  bool all_faces = false;
  Format format = Format::Text;
  std::optional<std::string> weights_file;  // replaces weight_text when set
  std::optional<std::string> output_path;
  bool timing = false;
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = kOk;
  std::string report;      // what goes to stdout or --out
  std::string diagnostic;  // what goes to stderr
};

// "nonstable,unstable,polystable" (any non-empty subset, any order).
// Throws ParseError on unknown or empty lists.
solver::Loci parse_loci(const std::string& text);

// Reads one weight per line in fundamental-weight coefficients; blank lines
// and '#' comments are skipped. Throws ParseError.
std::vector<rootdata::Weight> read_weights_file(const std::string& path, int rank);

// Solves the requested loci and renders the report. Errors become exit codes.
RunResult run(const RunConfig& config, const Limits& limits = Limits::from_environment());

struct SupportConfig {
  rootdata::DynkinType group;
  std::string weight_text;
  bool list = false;
  Format format = Format::Text;
};

RunResult run_support_only(const SupportConfig& config,
                           const Limits& limits = Limits::from_environment());

// Full command line: `gitsolve solve ...` / `gitsolve support ...`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gitsolve::cli
