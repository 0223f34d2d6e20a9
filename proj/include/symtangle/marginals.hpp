#pragma once

#include "symtangle/dicke.hpp"
#include "symtangle/smallmat.hpp"

namespace symtangle {

/// The six real elements of the two-qubit marginal, which in the basis
/// |00>, |01>, |10>, |11> reads
///
///     [A B B C]
///     [B D D E]
///     [B D D E]
///     [C E E F]
struct TwoQubitMarginal {
  double a_el = 0.0;
  double b_el = 0.0;
  double c_el = 0.0;
  double d_el = 0.0;
  double e_el = 0.0;
  double f_el = 0.0;
  DickeParams params;
};

/// 2x2 real symmetric single-qubit density matrix.
struct SingleQubitMarginal {
  SmallMatrix m{2};
};

TwoQubitMarginal two_qubit_marginal(const DickeParams& params);
/// Same elements, from precomputed amplitudes.
TwoQubitMarginal two_qubit_marginal(const AmplitudeVector& amps);

SmallMatrix marginal_matrix(const TwoQubitMarginal& m);

/// [[A+D, B+E], [B+E, D+F]]
SingleQubitMarginal single_qubit_marginal(const TwoQubitMarginal& m);

/// Partial transpose on the second qubit, in closed form from the elements.
SmallMatrix partial_transpose(const TwoQubitMarginal& m);

/// Partial transpose of an arbitrary 4x4 two-qubit operator on the second
/// qubit: out(i j; k l) = rho(i l; k j).
SmallMatrix partial_transpose(const SmallMatrix& rho);

/// Trace over the first (qubit == 0) or second (qubit == 1) factor of a 4x4
/// two-qubit operator.
SmallMatrix partial_trace_4x4(const SmallMatrix& rho, int qubit);

}  // namespace symtangle
