#pragma once

// File formats.
//
// State file (JSON):
//   { "n": 2,
//     "coefficients": [[0.8660254037844386, 0], [0, 0], [0.5, 0]],
//     "renormalize": false }
// `coefficients` holds N+1 [re, im] pairs ordered m = +j, j-1, ..., -j.
// `renormalize` is optional and defaults to false.
//
// Report file (JSON): tool name and version, n_atoms, collective moments,
// mean spin, frame direction cosines (null when degenerate), metrics (null
// when degenerate), degenerate flags and the classification. Doubles are
// written in shortest round-trip form, so parse -> serialize is lossless.
//
// Sweep table (CSV): fixed header, one row per parameter value, values
// printed with 17 significant digits, undefined values left empty.

#include <filesystem>
#include <string>
#include <string_view>

#include "spinent/dicke.hpp"
#include "spinent/metrics.hpp"

namespace spinent::io {

struct StateFile {
  int n = 0;
  CoefficientVector coefficients;
  bool renormalize = false;
};

/// Throws ParseError on malformed text.
StateFile parse_state_file(std::string_view text);
StateFile read_state_file(const std::filesystem::path& path);
/// Validates through custom_state (NormalizationError, LengthMismatch).
DickeState to_state(const StateFile& file);
std::string serialize_state(const DickeState& state);

struct ReportFile {
  std::string tool;
  std::string version;
  Analysis analysis;
};

std::string serialize_report(const Analysis& analysis);
ReportFile parse_report(std::string_view text);

/// printf("%.17g").
std::string format_double(double value);

std::string sweep_csv_header();
std::string sweep_csv_row(double parameter, const Analysis& analysis);

}  // namespace spinent::io
