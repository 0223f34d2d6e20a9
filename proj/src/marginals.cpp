#include "symtangle/marginals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "symtangle/error.hpp"

namespace symtangle {

TwoQubitMarginal two_qubit_marginal(const DickeParams& params) {
  return two_qubit_marginal(amplitudes(params));
}

TwoQubitMarginal two_qubit_marginal(const AmplitudeVector& amps) {
  const int n = amps.params.n_qubits();
  const int k = amps.params.degeneracy();
  const auto& beta = amps.beta;
  if (static_cast<int>(beta.size()) != k + 1) {
    throw Error(ErrorCode::InvalidParams, "amplitude vector must have k+1 entries");
  }

  std::vector<CgTriple> cg(k + 1);
  for (int r = 0; r <= k; ++r) cg[r] = cg_coefficients(n, r);

  TwoQubitMarginal out{.params = amps.params};
  for (int r = 0; r <= k; ++r) {
    const double w = beta[r] * beta[r];
    out.a_el += w * cg[r].c_plus * cg[r].c_plus;
    out.d_el += w * cg[r].c_zero * cg[r].c_zero;  // r = 0 term vanishes
    out.f_el += w * cg[r].c_minus * cg[r].c_minus;
  }
  out.d_el *= 0.5;
  for (int r = 0; r + 1 <= k; ++r) {
    const double w = beta[r] * beta[r + 1];
    out.b_el += w * cg[r].c_plus * cg[r + 1].c_zero;
    out.e_el += w * cg[r].c_zero * cg[r + 1].c_minus;
  }
  out.b_el *= std::numbers::sqrt2 / 2.0;
  out.e_el *= std::numbers::sqrt2 / 2.0;
  for (int r = 0; r + 2 <= k; ++r) out.c_el += beta[r] * beta[r + 2] * cg[r].c_plus * cg[r + 2].c_minus;
  return out;
}

SmallMatrix marginal_matrix(const TwoQubitMarginal& m) {
  const double A = m.a_el, B = m.b_el, C = m.c_el, D = m.d_el, E = m.e_el, F = m.f_el;
  return SmallMatrix(4, {A, B, B, C,
                         B, D, D, E,
                         B, D, D, E,
                         C, E, E, F});
}

SingleQubitMarginal single_qubit_marginal(const TwoQubitMarginal& m) {
  const double off = m.b_el + m.e_el;
  return {SmallMatrix(2, {m.a_el + m.d_el, off, off, m.d_el + m.f_el})};
}

SmallMatrix partial_transpose(const TwoQubitMarginal& m) {
  const double A = m.a_el, B = m.b_el, C = m.c_el, D = m.d_el, E = m.e_el, F = m.f_el;
  return SmallMatrix(4, {A, B, B, D,
                         B, D, C, E,
                         B, C, D, E,
                         D, E, E, F});
}

SmallMatrix partial_transpose(const SmallMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::WrongDimension, "partial transpose needs a 4x4 matrix");
  SmallMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
  return out;
}

SmallMatrix partial_trace_4x4(const SmallMatrix& rho, int qubit) {
  if (rho.dim() != 4) throw Error(ErrorCode::WrongDimension, "partial trace needs a 4x4 matrix");
  if (qubit != 0 && qubit != 1) throw Error(ErrorCode::OutOfRange, "qubit must be 0 or 1");
  SmallMatrix out(2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        // keep the other qubit, sum the traced one
        out(x, y) += qubit == 0 ? rho(2 * z + x, 2 * z + y) : rho(2 * x + z, 2 * y + z);
      }
  return out;
}

}  // namespace symtangle
