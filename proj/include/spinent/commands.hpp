#pragma once

// Implementations behind the `spinent` command-line tool. Each command writes
// its primary output to `out`, diagnostics to `err`, and returns the process
// exit code: 0 success, 1 input or usage error, 2 degenerate mean spin
// (analyze only; the report is still written).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinent/metrics.hpp"
#include "spinent/oracle.hpp"

namespace spinent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDegenerate = 2;

struct AnalyzeOptions {
  std::string path;
  AnalysisOptions analysis;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

struct MakeStateOptions {
  std::string kind;  // coherent | dicke | twist | custom
  int n = 0;
  double theta = 0.0;
  double phi = 0.0;
  double m = 0.0;
  double mu = 0.0;
  std::vector<std::string> coeffs;  // "re" or "re:im"
  bool renormalize = false;
};

int cmd_make_state(const MakeStateOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string kind;       // coherent | twist | dicke
  std::string parameter;  // theta | phi | mu | m; empty selects the kind's default
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  int n = 0;
  double theta = 0.0;
  double phi = 0.0;
  double mu = 0.0;
  std::string output = "-";  // "-" writes to `out`
  int threads = 1;
  AnalysisOptions analysis;
};

/// Parameter values start + i (stop - start) / (steps - 1), i = 0..steps-1.
std::vector<double> sweep_values(double start, double stop, int steps);
/// The CSV text of a sweep; throws spinent::Error on invalid options.
std::string run_sweep(const SweepOptions& options);
int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

struct OracleCheckOptions {
  int n_min = 2;
  int n_max = 8;
  int trials = 100;
  std::uint64_t seed = 42;
  int cap = oracle::kDefaultDimensionCap;
  double tolerance = 1e-9;
  int threads = 1;
};

struct FieldDeviation {
  std::string name;
  double max_abs = 0.0;
};

struct OracleCheckSummary {
  int states_checked = 0;
  int degenerate_skipped = 0;
  int classification_mismatches = 0;
  /// Dicke-path report vs 2^N oracle, plus per-atom and decomposition checks.
  std::vector<FieldDeviation> oracle_fields;
  /// Alternative algebraic routes to S and to the correlation terms.
  std::vector<FieldDeviation> route_fields;
  /// Frame postconditions: |<J_x'>|, |<J_y'>|, |<J_z'> - |<J>||.
  std::vector<FieldDeviation> frame_fields;
};

/// Same trial states for a given seed regardless of thread count.
OracleCheckSummary run_oracle_check(const OracleCheckOptions& options);
/// Parses "A..B" or "A" into an inclusive range; throws InvalidParameter.
std::pair<int, int> parse_n_range(const std::string& text);
int cmd_oracle_check(const OracleCheckOptions& options, std::ostream& out, std::ostream& err);

}  // namespace spinent::cli
