#include "symtangle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "symtangle/error.hpp"

namespace symtangle::oracle {

namespace {

void require_cap(int n_qubits, int cap) {
  if (n_qubits > cap) {
    throw Error(ErrorCode::CapExceeded,
                "N=" + std::to_string(n_qubits) + " exceeds oracle cap " + std::to_string(cap));
  }
  if (n_qubits < 1) throw Error(ErrorCode::OutOfRange, "N must be positive");
}

// Exact for the sizes the oracle admits.
double binomial(int n, int r) {
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return std::round(out);
}

Complex ipow(Complex base, int exponent) {
  Complex out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

int bit_of(std::uint64_t index, int n_qubits, int qubit) {
  return static_cast<int>((index >> (n_qubits - qubit)) & 1U);
}

}  // namespace

Spinor::Spinor(Complex c0, Complex c1) : c0_(c0), c1_(c1) {
  const double n2 = std::norm(c0) + std::norm(c1);
  if (!(std::abs(n2 - 1.0) <= 1e-14)) {
    throw Error(ErrorCode::InvalidParams, "spinor norm^2 " + std::to_string(n2) + " != 1");
  }
}

Spinor Spinor::from_angles(double alpha, double phase) {
  const Complex global = std::polar(1.0, phase / 2.0);
  return {std::cos(alpha / 2.0) * global, std::sin(alpha / 2.0) * global};
}

Spinor Spinor::real_overlap(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::InvalidParams, "overlap must lie in [0, 1]");
  return {a, std::sqrt(std::max(0.0, (1.0 - a) * (1.0 + a)))};
}

double FullState::norm() const {
  double s = 0.0;
  for (const auto& v : amplitudes) s += std::norm(v);
  return std::sqrt(s);
}

FullState dicke_basis_vector(int n_qubits, int r, int cap) {
  require_cap(n_qubits, cap);
  if (r < 0 || r > n_qubits) throw Error(ErrorCode::OutOfRange, "weight r must lie in [0, N]");
  FullState psi{n_qubits, std::vector<Complex>(std::size_t{1} << n_qubits)};
  const double amp = 1.0 / std::sqrt(binomial(n_qubits, r));
  for (std::uint64_t i = 0; i < psi.amplitudes.size(); ++i)
    if (std::popcount(i) == r) psi.amplitudes[i] = amp;
  return psi;
}

FullState expand_state(const DickeParams& params, int cap) {
  const int n = params.n_qubits();
  require_cap(n, cap);
  const auto amps = amplitudes(params);
  FullState psi{n, std::vector<Complex>(std::size_t{1} << n)};
  for (int r = 0; r <= params.degeneracy(); ++r) {
    if (amps.beta[r] == 0.0) continue;
    const FullState basis = dicke_basis_vector(n, r, cap);
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) psi.amplitudes[i] += amps.beta[r] * basis.amplitudes[i];
  }
  return psi;
}

FullState symmetrize_two_spinors(int n_qubits, int k, const Spinor& eps1, const Spinor& eps2, int cap) {
  require_cap(n_qubits, cap);
  if (k < 1 || k > n_qubits - 1) throw Error(ErrorCode::OutOfRange, "k must lie in [1, N-1]");

  // Sum over the binom(N, k) placements of eps2. For a bitstring of weight w,
  // a placement covering j of its ones contributes
  //   eps2[1]^j eps2[0]^(k-j) eps1[1]^(w-j) eps1[0]^(N-w-k+j)
  // and there are binom(w, j) binom(N-w, k-j) such placements.
  std::vector<Complex> by_weight(n_qubits + 1);
  for (int w = 0; w <= n_qubits; ++w) {
    Complex sum = 0.0;
    for (int j = 0; j <= std::min(w, k); ++j) {
      const int zeros_for_eps2 = k - j;
      const int zeros_for_eps1 = n_qubits - w - zeros_for_eps2;
      if (zeros_for_eps2 > n_qubits - w || zeros_for_eps1 < 0) continue;
      const double count = binomial(w, j) * binomial(n_qubits - w, zeros_for_eps2);
      sum += count * ipow(eps2[1], j) * ipow(eps2[0], zeros_for_eps2) * ipow(eps1[1], w - j) *
             ipow(eps1[0], zeros_for_eps1);
    }
    by_weight[w] = sum;
  }

  FullState psi{n_qubits, std::vector<Complex>(std::size_t{1} << n_qubits)};
  for (std::uint64_t i = 0; i < psi.amplitudes.size(); ++i) psi.amplitudes[i] = by_weight[std::popcount(i)];
  const double norm = psi.norm();
  if (norm < 1e-13) throw Error(ErrorCode::ZeroState, "symmetrized state vanishes");
  for (auto& v : psi.amplitudes) v /= norm;
  return psi;
}

ComplexMatrix4 partial_trace_pair(const FullState& psi, int qubit_i, int qubit_j) {
  const int n = psi.n_qubits;
  if (n < 2) throw Error(ErrorCode::OutOfRange, "two-qubit marginal needs N >= 2");
  if (qubit_i < 1 || qubit_i > n || qubit_j < 1 || qubit_j > n || qubit_i == qubit_j) {
    throw Error(ErrorCode::OutOfRange, "invalid qubit pair");
  }
  const std::uint64_t mask_i = std::uint64_t{1} << (n - qubit_i);
  const std::uint64_t mask_j = std::uint64_t{1} << (n - qubit_j);

  ComplexMatrix4 rho{};
  for (std::uint64_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
    const Complex amp = psi.amplitudes[idx];
    if (amp == Complex{}) continue;
    const int row = 2 * bit_of(idx, n, qubit_i) + bit_of(idx, n, qubit_j);
    const std::uint64_t tail = idx & ~(mask_i | mask_j);
    for (int col = 0; col < 4; ++col) {
      const std::uint64_t partner = tail | ((col & 2) ? mask_i : 0) | ((col & 1) ? mask_j : 0);
      rho[row][col] += amp * std::conj(psi.amplitudes[partner]);
    }
  }
  return rho;
}

SmallMatrix partial_trace_to_two(const FullState& psi) {
  const auto rho = partial_trace_pair(psi, 1, 2);
  SmallMatrix out(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (std::abs(rho[r][c].imag()) > 1e-12) {
        throw Error(ErrorCode::NumericalInstability, "two-qubit marginal is not real");
      }
      out(r, c) = rho[r][c].real();
    }
  return out;
}

SmallMatrix partial_trace_to_one(const FullState& psi) {
  const int n = psi.n_qubits;
  if (n < 1) throw Error(ErrorCode::OutOfRange, "empty state");
  const std::uint64_t mask = std::uint64_t{1} << (n - 1);
  std::array<std::array<Complex, 2>, 2> rho{};
  for (std::uint64_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
    const int row = bit_of(idx, n, 1);
    const std::uint64_t tail = idx & ~mask;
    for (int col = 0; col < 2; ++col) rho[row][col] += psi.amplitudes[idx] * std::conj(psi.amplitudes[tail | (col ? mask : 0)]);
  }
  SmallMatrix out(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      if (std::abs(rho[r][c].imag()) > 1e-12) {
        throw Error(ErrorCode::NumericalInstability, "single-qubit marginal is not real");
      }
      out(r, c) = rho[r][c].real();
    }
  return out;
}

double max_abs_diff(const FullState& psi, const FullState& phi) {
  if (psi.amplitudes.size() != phi.amplitudes.size()) {
    throw Error(ErrorCode::WrongDimension, "state sizes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
    worst = std::max(worst, std::abs(psi.amplitudes[i] - phi.amplitudes[i]));
  return worst;
}

}  // namespace symtangle::oracle
