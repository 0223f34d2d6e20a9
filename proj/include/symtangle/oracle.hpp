#pragma once

// Brute-force reference path: dense 2^N state vectors and explicit partial
// traces. Shares no code with the closed-form marginals it validates, apart
// from the SmallMatrix carrier and the canonical amplitudes fed to
// expand_state.

#include <array>
#include <complex>
#include <vector>

#include "symtangle/dicke.hpp"
#include "symtangle/smallmat.hpp"

namespace symtangle::oracle {

using Complex = std::complex<double>;

inline constexpr int kDefaultQubitCap = 14;

/// Single-qubit state c0|0> + c1|1>, unit norm.
class Spinor {
 public:
  /// Throws InvalidParams unless |c0|^2 + |c1|^2 = 1 within 1e-14.
  Spinor(Complex c0, Complex c1);

  /// (cos(alpha/2)|0> + sin(alpha/2)|1>) e^{i phase/2}
  static Spinor from_angles(double alpha, double phase);
  /// a|0> + sqrt(1-a^2)|1>, 0 <= a <= 1.
  static Spinor real_overlap(double a);
  static Spinor zero() { return {1.0, 0.0}; }
  static Spinor one() { return {0.0, 1.0}; }

  Complex c0() const noexcept { return c0_; }
  Complex c1() const noexcept { return c1_; }
  Complex operator[](int bit) const noexcept { return bit == 0 ? c0_ : c1_; }

 private:
  Complex c0_;
  Complex c1_;
};

/// Dense N-qubit state. Qubit 1 is the most significant bit of the index.
struct FullState {
  int n_qubits = 0;
  std::vector<Complex> amplitudes;

  double norm() const;
};

/// (|...> over all bitstrings of Hamming weight r) / sqrt(binom(N, r)).
FullState dicke_basis_vector(int n_qubits, int r, int cap = kDefaultQubitCap);

/// sum_r beta_r |N/2, N/2 - r> with the canonical amplitudes.
FullState expand_state(const DickeParams& params, int cap = kDefaultQubitCap);

/// Normalized symmetrization of N-k copies of eps1 and k copies of eps2.
/// Throws ZeroState if the unnormalized norm falls below 1e-13.
FullState symmetrize_two_spinors(int n_qubits, int k, const Spinor& eps1, const Spinor& eps2,
                                 int cap = kDefaultQubitCap);

using ComplexMatrix4 = std::array<std::array<Complex, 4>, 4>;

/// Reduced state of qubits (i, j), 1-based, i != j, ordered |x_i x_j>.
ComplexMatrix4 partial_trace_pair(const FullState& psi, int qubit_i, int qubit_j);

/// Real reduced state of qubits (1, 2). Throws NumericalInstability if an
/// imaginary part exceeds 1e-12 (only possible for phased spinor input).
SmallMatrix partial_trace_to_two(const FullState& psi);

/// Real reduced state of qubit 1.
SmallMatrix partial_trace_to_one(const FullState& psi);

/// Largest |psi_i - phi_i|; throws WrongDimension on size mismatch.
double max_abs_diff(const FullState& psi, const FullState& phi);

}  // namespace symtangle::oracle
