#pragma once

// Grid-wide property checks on the tangles, and cross-validation of the
// closed-form marginals against the brute-force oracle.

#include <iosfwd>
#include <string>
#include <vector>

#include "symtangle/sweep.hpp"

namespace symtangle {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  std::string detail;  ///< first offending cell, when failed
};

struct CheckOptions {
  int n_max = 12;             ///< dense N range is 3..n_max
  int a_steps = 11;           ///< a-grid over [0, 1]
  double tol = 1e-9;          ///< slack for every inequality
  std::vector<int> spot_n;    ///< extra N values beyond the dense range
  int spot_k_max = 5;         ///< k limit for the spot values
  int jobs = 1;
};

struct CheckReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult& property(const std::string& name) const;
};

/// Throws InvalidParams for n_max < 3, a_steps < 2 or a negative tolerance.
CheckReport run_check(const CheckOptions& opts, const RecordFn& fn = RecordFn{});

void print_check(std::ostream& out, const CheckReport& report);

struct OracleOptions {
  int n_max = 12;
  int a_steps = 11;
  double tol = 1e-10;
  int cap = 12;
};

/// Maximum absolute deviations over the a-grid for one (N, k).
struct OracleCell {
  int n = 0;
  int k = 0;
  double state = 0.0;          ///< symmetrized spinors vs canonical expansion
  double marginal = 0.0;       ///< closed-form vs traced two-qubit marginal
  double single = 0.0;         ///< single-qubit marginal, all three routes
  double pair_choice = 0.0;    ///< every qubit pair vs pair (1, 2)
  double concurrence = 0.0;
  double negativity = 0.0;
  double one_vs_rest = 0.0;
  double worst_a = 0.0;        ///< a at which the largest deviation occurred

  double worst() const;
};

struct OracleReport {
  double tol = 0.0;
  std::vector<OracleCell> cells;

  bool passed() const;
  const OracleCell& worst_cell() const;
};

/// Throws CapExceeded when n_max > cap, InvalidParams when n_max < 2.
OracleReport run_oracle(const OracleOptions& opts);

void print_oracle(std::ostream& out, const OracleReport& report);

}  // namespace symtangle
