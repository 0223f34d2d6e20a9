// symtangle: sweeps, property checks and oracle cross-validation for the
// two-spinor symmetric qubit states.
//
// Exit status: 0 all checks pass, 1 property violation, 2 usage/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "symtangle/error.hpp"
#include "symtangle/sweep.hpp"
#include "symtangle/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int parse_jobs(const std::string& text) {
  if (text == "auto") return symtangle::auto_jobs();
  std::size_t used = 0;
  int jobs = 0;
  try {
    jobs = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || jobs < 1) {
    throw symtangle::Error(symtangle::ErrorCode::InvalidParams, "--jobs expects a positive integer or 'auto'");
  }
  return jobs;
}

std::optional<std::vector<int>> parse_k(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1 && tokens.front() == "all") return std::nullopt;
  std::vector<int> ks;
  for (const auto& t : tokens) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) {
      throw symtangle::Error(symtangle::ErrorCode::InvalidParams, "--k expects integers or 'all', got '" + t + "'");
    }
    ks.push_back(k);
  }
  return ks;
}

int run_sweep(symtangle::SweepConfig cfg, const std::vector<std::string>& k_tokens, const std::string& jobs_text) {
  cfg.k_values = parse_k(k_tokens);
  const int jobs = parse_jobs(jobs_text);
  const auto grid = symtangle::build_grid(cfg);
  for (const auto& w : grid.warnings) std::cerr << "warning: " << w << '\n';
  if (grid.cells.empty()) {
    std::cerr << "error: no admissible (N, k, a) cells\n";
    return kExitUsage;
  }
  const auto rows = symtangle::compute_records(grid.cells, jobs);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw symtangle::Error(symtangle::ErrorCode::Io, "cannot open " + cfg.output_path);
    out = &file;
  }
  const auto summary = symtangle::write_csv(*out, std::cerr, rows, cfg.precision);
  out->flush();
  if (!*out) throw symtangle::Error(symtangle::ErrorCode::Io, "write failed");
  if (summary.written == 0) {
    std::cerr << "error: every row failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced density matrices and monogamy tangles of two-spinor symmetric qubit states"};
  app.require_subcommand(1);

  symtangle::SweepConfig sweep_cfg;
  std::vector<std::string> k_tokens{"all"};
  std::string jobs_text = "auto";

  auto* sweep = app.add_subcommand("sweep", "Write tangle records over an (N, k, a) grid as CSV");
  sweep->add_option("--n", sweep_cfg.n_values, "Qubit counts")->delimiter(',')->capture_default_str();
  sweep->add_option("--k", k_tokens, "Degeneracies, or 'all' for 1..floor(N/2)")->delimiter(',')->capture_default_str();
  sweep->add_option("--a-min", sweep_cfg.a_min, "Smallest non-orthogonality parameter")->capture_default_str();
  sweep->add_option("--a-max", sweep_cfg.a_max, "Largest non-orthogonality parameter")->capture_default_str();
  sweep->add_option("--a-steps", sweep_cfg.a_steps, "Grid points, endpoints included")->capture_default_str();
  sweep->add_option("--out", sweep_cfg.output_path, "Output path (default: standard output)");
  sweep->add_option("--precision", sweep_cfg.precision, "Fractional digits")->capture_default_str();
  sweep->add_option("--jobs", jobs_text, "Worker threads or 'auto'")->capture_default_str();

  symtangle::CheckOptions check_opts;
  check_opts.spot_n = {50, 100};
  auto* check = app.add_subcommand("check", "Verify monogamy and ordering properties over a grid");
  check->add_option("--n-max", check_opts.n_max, "Largest N of the dense grid")->capture_default_str();
  check->add_option("--a-steps", check_opts.a_steps, "Grid points over [0, 1]")->capture_default_str();
  check->add_option("--tol", check_opts.tol, "Slack for every inequality")->capture_default_str();
  check->add_option("--spot-n", check_opts.spot_n, "Extra N values checked for k <= 5 (0 for none)")
      ->delimiter(',')
      ->capture_default_str();
  check->add_option("--jobs", jobs_text, "Worker threads or 'auto'")->capture_default_str();

  symtangle::OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Compare closed-form marginals with brute-force partial traces");
  oracle->add_option("--n-max", oracle_opts.n_max, "Largest N (at most 12)")->capture_default_str();
  oracle->add_option("--a-steps", oracle_opts.a_steps, "Grid points over [0, 1]")->capture_default_str();
  oracle->add_option("--tol", oracle_opts.tol, "Largest admissible deviation")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep(sweep_cfg, k_tokens, jobs_text);

    if (*check) {
      check_opts.jobs = parse_jobs(jobs_text);
      std::erase(check_opts.spot_n, 0);
      const auto report = symtangle::run_check(check_opts);
      symtangle::print_check(std::cout, report);
      return report.passed() ? kExitOk : kExitViolation;
    }

    if (*oracle) {
      const auto report = symtangle::run_oracle(oracle_opts);
      symtangle::print_oracle(std::cout, report);
      if (!report.passed()) {
        const auto& w = report.worst_cell();
        std::cerr << "oracle mismatch: worst cell N=" << w.n << " k=" << w.k << " deviation " << w.worst() << '\n';
        return kExitViolation;
      }
      return kExitOk;
    }
  } catch (const symtangle::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
