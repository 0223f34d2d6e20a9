#include "symtangle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <thread>

#include "symtangle/error.hpp"

namespace symtangle {

void SweepConfig::validate() const {
  if (n_values.empty()) throw Error(ErrorCode::InvalidParams, "no N values given");
  if (k_values && k_values->empty()) throw Error(ErrorCode::InvalidParams, "no k values given");
  if (!std::isfinite(a_min) || !std::isfinite(a_max) || a_min < 0.0 || a_max > 1.0 || a_min > a_max) {
    throw Error(ErrorCode::InvalidParams, "need 0 <= a_min <= a_max <= 1");
  }
  if (a_steps < 2) throw Error(ErrorCode::InvalidParams, "a_steps must be >= 2");
  if (precision < 1 || precision > 17) throw Error(ErrorCode::InvalidParams, "precision must lie in [1, 17]");
}

std::vector<double> a_grid(double a_min, double a_max, int steps) {
  if (steps < 2) throw Error(ErrorCode::InvalidParams, "a_steps must be >= 2");
  std::vector<double> grid(steps);
  const double step = (a_max - a_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[i] = a_min + i * step;
  grid.back() = a_max;
  return grid;
}

SweepGrid build_grid(const SweepConfig& cfg) {
  cfg.validate();
  const std::set<int> ns(cfg.n_values.begin(), cfg.n_values.end());
  const auto as = a_grid(cfg.a_min, cfg.a_max, cfg.a_steps);

  SweepGrid grid;
  for (int n : ns) {
    std::set<int> ks;
    if (cfg.k_values) {
      ks.insert(cfg.k_values->begin(), cfg.k_values->end());
    } else {
      for (int k = 1; k <= n / 2; ++k) ks.insert(k);
    }
    if (ks.empty()) grid.warnings.push_back("N=" + std::to_string(n) + ": no admissible k");
    for (int k : ks) {
      try {
        for (double a : as) grid.cells.emplace_back(n, k, a);
      } catch (const Error& e) {
        grid.warnings.push_back("skipping N=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return grid;
}

int auto_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<SweepRow> compute_records(std::span<const DickeParams> cells, int jobs, const RecordFn& fn) {
  const RecordFn eval = fn ? fn : RecordFn([](const DickeParams& p) { return tangle_record(p); });
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (const auto& p : cells) rows.push_back({p, std::nullopt, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].record = eval(rows[i].params);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };

  const int threads = std::clamp<int>(jobs, 1, static_cast<int>(std::max<std::size_t>(rows.size(), 1)));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) throw Error(ErrorCode::NumericalInstability, "cannot render value");
  std::string out(buf, res.ptr);
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string csv_row(const TangleRecord& rec, int precision) {
  std::string line = std::to_string(rec.params.n_qubits());
  line += ',';
  line += std::to_string(rec.params.degeneracy());
  for (double v : {rec.params.non_orthogonality(), rec.c1_sq, rec.c2_sq, rec.tau, rec.n2, rec.xi}) {
    line += ',';
    line += format_fixed(v, precision);
  }
  return line;
}

CsvSummary write_csv(std::ostream& out, std::ostream& diagnostics, const std::vector<SweepRow>& rows,
                     int precision) {
  CsvSummary summary;
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    if (row.record) {
      out << csv_row(*row.record, precision) << '\n';
      ++summary.written;
    } else {
      diagnostics << "warning: skipping N=" << row.params.n_qubits() << " k=" << row.params.degeneracy()
                  << " a=" << format_fixed(row.params.non_orthogonality(), precision) << ": " << row.error
                  << '\n';
      ++summary.failed;
    }
  }
  return summary;
}

}  // namespace symtangle
