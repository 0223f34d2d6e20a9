#pragma once

// Canonical one-parameter amplitudes of the symmetric N-qubit states built
// from two distinct spinors, one repeated N-k times and the other k times,
// plus the spin-(N/2 - 1) x spin-1 Clebsch-Gordan coefficients used to split
// off two qubits.

#include <vector>

namespace symtangle {

/// The triple (N, k, a) labelling one state of the family.
///
/// N >= 2 qubits, 1 <= k <= floor(N/2), non-orthogonality 0 <= a <= 1.
/// a = 0 gives the Dicke state with k excitations; a = 1 the product |0...0>.
class DickeParams {
 public:
  /// Throws InvalidParams when any invariant fails.
  DickeParams(int n_qubits, int degeneracy, double non_orthogonality);

  int n_qubits() const noexcept { return n_; }
  int degeneracy() const noexcept { return k_; }
  double non_orthogonality() const noexcept { return a_; }
  /// sqrt(1 - a^2)
  double complement() const noexcept { return b_; }

  friend bool operator==(const DickeParams&, const DickeParams&) = default;

 private:
  int n_;
  int k_;
  double a_;
  double b_;
};

/// Normalized amplitudes over the Dicke basis |N/2, N/2 - r>, r = 0..k.
struct AmplitudeVector {
  DickeParams params;
  std::vector<double> beta;
};

struct CgTriple {
  double c_plus;   // m2 = +1
  double c_zero;   // m2 = 0
  double c_minus;  // m2 = -1
};

/// Coupling coefficients <N/2-1, N/2-r-m2; 1, m2 | N/2, N/2-r> for
/// m2 in {+1, 0, -1}. Throws OutOfRange unless N >= 2 and 0 <= r <= N.
CgTriple cg_coefficients(int n_qubits, int r);

/// Amplitudes evaluated in log space and normalized to unit length.
AmplitudeVector amplitudes(const DickeParams& params);

/// log(n!) for n >= 0.
double log_factorial(int n);

}  // namespace symtangle
