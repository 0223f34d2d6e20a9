#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symtangle/dicke.hpp"
#include "symtangle/measures.hpp"

namespace symtangle {

/// Computes one record; swapped out in tests to inject faults.
using RecordFn = std::function<TangleRecord(const DickeParams&)>;

struct SweepConfig {
  std::vector<int> n_values{10, 100};
  std::optional<std::vector<int>> k_values;  ///< nullopt: every k in 1..floor(N/2)
  double a_min = 0.0;
  double a_max = 1.0;
  int a_steps = 101;
  int precision = 12;
  std::string output_path;  ///< empty: standard output

  /// Throws InvalidParams on a malformed configuration.
  void validate() const;
};

/// a_i = a_min + i (a_max - a_min) / (steps - 1), both endpoints included.
std::vector<double> a_grid(double a_min, double a_max, int steps);

struct SweepGrid {
  std::vector<DickeParams> cells;     ///< lexicographic in (N, k, a)
  std::vector<std::string> warnings;  ///< skipped (N, k) combinations
};

SweepGrid build_grid(const SweepConfig& cfg);

struct SweepRow {
  DickeParams params;
  std::optional<TangleRecord> record;
  std::string error;  ///< set when record is empty
};

/// Evaluates every cell on `jobs` worker threads; output keeps input order.
std::vector<SweepRow> compute_records(std::span<const DickeParams> cells, int jobs,
                                      const RecordFn& fn = RecordFn{});

/// Worker count for "auto" (hardware concurrency, at least 1).
int auto_jobs();

inline constexpr std::string_view kCsvHeader = "N,k,a,c1_sq,c2_sq,tau,n2,xi";

/// Locale-independent fixed notation with `precision` fractional digits.
/// Values that round to zero print without a sign.
std::string format_fixed(double value, int precision);

std::string csv_row(const TangleRecord& rec, int precision);

struct CsvSummary {
  std::size_t written = 0;
  std::size_t failed = 0;
};

/// Header plus one LF-terminated line per successful row. Failed rows are
/// reported on `diagnostics` and skipped.
CsvSummary write_csv(std::ostream& out, std::ostream& diagnostics, const std::vector<SweepRow>& rows,
                     int precision);

}  // namespace symtangle
