#pragma once

#include <vector>

#include "symtangle/dicke.hpp"
#include "symtangle/marginals.hpp"
#include "symtangle/smallmat.hpp"

namespace symtangle {

/// Residual-entanglement summary of one state of the family.
struct TangleRecord {
  DickeParams params;
  double c1_sq = 0.0;  ///< squared one-vs-rest concurrence (= squared negativity)
  double c2_sq = 0.0;  ///< squared pairwise concurrence
  double tau = 0.0;    ///< c1_sq - (N-1) c2_sq
  double n2 = 0.0;     ///< pairwise negativity, doubled convention
  double xi = 0.0;     ///< c1_sq - (N-1) n2^2
};

/// Tolerances for density-matrix preconditions.
inline constexpr double kDensityTolerance = 1e-10;

/// Throws NotDensityMatrix unless m is symmetric, has unit trace and is PSD,
/// each within kDensityTolerance.
void require_density_matrix(const SmallMatrix& m);

/// Wootters concurrence of a real two-qubit density matrix.
///
/// The spin-flip singular values sqrt(lambda_i) are taken as the absolute
/// eigenvalues of the symmetric matrix sqrt(rho) S sqrt(rho), S = sy (x) sy,
/// which avoids square roots of roundoff-level eigenvalues of rho rho'.
double concurrence_two_qubit(const SmallMatrix& rho);

/// Eigenvalues of rho rho' with rho' = (sy (x) sy) rho (sy (x) sy), descending.
/// Real parts in (-1e-10, 0) become 0; an imaginary part above 1e-8 throws
/// NumericalInstability.
std::vector<double> spin_flip_spectrum(const SmallMatrix& rho);

/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) from a descending spectrum.
double concurrence_from_spectrum(const std::vector<double>& spectrum);

/// Fixed 4x4 sign-permutation matrix sy (x) sy.
SmallMatrix spin_flip_operator();

/// One-vs-rest entanglement 2 sqrt(det rho1); it is both the concurrence and
/// the (doubled) negativity of a pure state's single-qubit cut.
double one_vs_rest(const SingleQubitMarginal& rho1);

/// 4 det rho1, the square of one_vs_rest without the round trip through sqrt.
double one_vs_rest_squared(const SingleQubitMarginal& rho1);

/// ||rho^T2||_1 - 1, in [0, 1].
double negativity_two_qubit(const TwoQubitMarginal& m);
/// Same measure for an arbitrary real two-qubit density matrix.
double negativity_two_qubit(const SmallMatrix& rho);

TangleRecord tangle_record(const DickeParams& params);
/// Measures of an already assembled marginal.
TangleRecord tangle_record(const TwoQubitMarginal& marginal);

}  // namespace symtangle
