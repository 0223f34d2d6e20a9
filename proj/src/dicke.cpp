#include "symtangle/dicke.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "symtangle/error.hpp"

namespace symtangle {

namespace {

constexpr int kLogFactorialTableSize = 4096;

const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
  // std::lgamma touches the global signgam, so it only runs here, once.
  static const auto table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    for (int n = 0; n < kLogFactorialTableSize; ++n) t[n] = std::lgamma(n + 1.0);
    return t;
  }();
  return table;
}

// Stirling series for log(n!); the truncation error is below 1e-20 at n >= 4096.
double log_factorial_stirling(double n) {
  const double x = n + 1.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0)));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

DickeParams::DickeParams(int n_qubits, int degeneracy, double non_orthogonality)
    : n_(n_qubits), k_(degeneracy), a_(non_orthogonality), b_(0.0) {
  if (n_ < 2) throw Error(ErrorCode::InvalidParams, "N must be >= 2, got " + std::to_string(n_));
  if (k_ < 1 || k_ > n_ / 2) {
    throw Error(ErrorCode::InvalidParams, "k must satisfy 1 <= k <= floor(N/2); got N=" +
                                              std::to_string(n_) + ", k=" + std::to_string(k_));
  }
  if (!std::isfinite(a_) || a_ < 0.0 || a_ > 1.0) {
    throw Error(ErrorCode::InvalidParams, "a must lie in [0, 1], got " + std::to_string(a_));
  }
  b_ = std::sqrt(std::max(0.0, (1.0 - a_) * (1.0 + a_)));
}

double log_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "log_factorial of negative argument");
  if (n < kLogFactorialTableSize) return log_factorial_table()[n];
  return log_factorial_stirling(n);
}

CgTriple cg_coefficients(int n_qubits, int r) {
  if (n_qubits < 2) throw Error(ErrorCode::OutOfRange, "N must be >= 2");
  if (r < 0 || r > n_qubits) {
    throw Error(ErrorCode::OutOfRange,
                "r must lie in [0, N]; got r=" + std::to_string(r) + ", N=" + std::to_string(n_qubits));
  }
  const std::int64_t n = n_qubits;
  const std::int64_t m = r;
  const double denom = static_cast<double>(n * (n - 1));
  // All numerators are products of non-negative integers for 0 <= r <= N.
  const auto root = [denom](std::int64_t num) {
    return num <= 0 ? 0.0 : std::sqrt(static_cast<double>(num) / denom);
  };
  return {root((n - m) * (n - m - 1)), root(2 * m * (n - m)), root(m * (m - 1))};
}

AmplitudeVector amplitudes(const DickeParams& params) {
  const int n = params.n_qubits();
  const int k = params.degeneracy();
  const double a = params.non_orthogonality();
  const double b = params.complement();

  AmplitudeVector out{params, std::vector<double>(k + 1, 0.0)};
  if (a == 0.0) {
    out.beta[k] = 1.0;
    return out;
  }
  if (b == 0.0) {
    out.beta[0] = 1.0;
    return out;
  }

  const double log_a = std::log(a);
  const double log_b = std::log(b);
  const double log_n_fact = log_factorial(n);
  const double log_nk_fact = log_factorial(n - k);
  std::vector<double> logs(k + 1);
  for (int r = 0; r <= k; ++r) {
    logs[r] = 0.5 * (log_n_fact + log_factorial(n - r) - log_factorial(r)) - log_nk_fact -
              log_factorial(k - r) + (k - r) * log_a + r * log_b;
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  double norm_sq = 0.0;
  for (int r = 0; r <= k; ++r) {
    out.beta[r] = std::exp(logs[r] - peak);
    norm_sq += out.beta[r] * out.beta[r];
  }
  const double norm = std::sqrt(norm_sq);
  for (double& v : out.beta) v /= norm;
  return out;
}

}  // namespace symtangle
