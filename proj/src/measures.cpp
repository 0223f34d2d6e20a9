#include "symtangle/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symtangle/error.hpp"

namespace symtangle {

namespace {

double clamp_unit(double value, const char* what) {
  if (value < -kDensityTolerance || value > 1.0 + kDensityTolerance) {
    throw Error(ErrorCode::NumericalInstability,
                std::string(what) + " outside [0, 1]: " + std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace

void require_density_matrix(const SmallMatrix& m) {
  if (!m.all_finite()) throw Error(ErrorCode::NotDensityMatrix, "non-finite entries");
  if (m.asymmetry() > kSymmetryTolerance * std::max(1.0, m.max_abs())) {
    throw Error(ErrorCode::NotDensityMatrix, "matrix is not symmetric");
  }
  if (std::abs(m.trace() - 1.0) > kDensityTolerance) {
    throw Error(ErrorCode::NotDensityMatrix, "trace " + std::to_string(m.trace()) + " != 1");
  }
  const auto ev = sym_eigenvalues(m);
  if (ev.back() < -kDensityTolerance) {
    throw Error(ErrorCode::NotDensityMatrix, "negative eigenvalue " + std::to_string(ev.back()));
  }
}

SmallMatrix spin_flip_operator() {
  return SmallMatrix(4, { 0, 0, 0, -1,
                          0, 0, 1,  0,
                          0, 1, 0,  0,
                         -1, 0, 0,  0});
}

double concurrence_two_qubit(const SmallMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::WrongDimension, "concurrence needs a 4x4 matrix");
  require_density_matrix(rho);
  const SmallMatrix root = sqrt_psd(rho);
  SmallMatrix core = root * spin_flip_operator() * root;
  core = 0.5 * (core + core.transposed());

  auto singular = sym_eigenvalues(core);
  for (double& v : singular) v = std::abs(v);
  std::sort(singular.begin(), singular.end(), std::greater<>());
  const double c = singular[0] - singular[1] - singular[2] - singular[3];
  return clamp_unit(std::max(0.0, c), "concurrence");
}

std::vector<double> spin_flip_spectrum(const SmallMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::WrongDimension, "spin-flip spectrum needs a 4x4 matrix");
  const SmallMatrix flip = spin_flip_operator();
  const auto eig = general_eigenvalues(rho * (flip * rho * flip));
  std::vector<double> out;
  out.reserve(eig.size());
  for (const auto& ev : eig) {
    if (std::abs(ev.imag()) > 1e-8) {
      throw Error(ErrorCode::NumericalInstability,
                  "complex eigenvalue of rho rho' (imag " + std::to_string(ev.imag()) + ")");
    }
    double re = ev.real();
    if (re < 0.0 && re > -kDensityTolerance) re = 0.0;
    out.push_back(re);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double concurrence_from_spectrum(const std::vector<double>& spectrum) {
  if (spectrum.size() != 4) throw Error(ErrorCode::WrongDimension, "spectrum must have 4 values");
  std::vector<double> roots;
  for (double v : spectrum) {
    if (v < 0.0) throw Error(ErrorCode::NumericalInstability, "negative eigenvalue of rho rho'");
    roots.push_back(std::sqrt(v));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double one_vs_rest_squared(const SingleQubitMarginal& rho1) {
  require_density_matrix(rho1.m);
  return clamp_unit(4.0 * std::max(0.0, det2(rho1.m)), "squared one-vs-rest entanglement");
}

double one_vs_rest(const SingleQubitMarginal& rho1) { return std::sqrt(one_vs_rest_squared(rho1)); }

double negativity_two_qubit(const TwoQubitMarginal& m) {
  require_density_matrix(marginal_matrix(m));
  return clamp_unit(trace_norm_symmetric(partial_transpose(m)) - 1.0, "negativity");
}

double negativity_two_qubit(const SmallMatrix& rho) {
  require_density_matrix(rho);
  return clamp_unit(trace_norm_symmetric(partial_transpose(rho)) - 1.0, "negativity");
}

TangleRecord tangle_record(const DickeParams& params) { return tangle_record(two_qubit_marginal(params)); }

TangleRecord tangle_record(const TwoQubitMarginal& marginal) {
  const SmallMatrix rho = marginal_matrix(marginal);
  const double c2 = concurrence_two_qubit(rho);
  const double n2 = negativity_two_qubit(marginal);
  const double c1_sq = one_vs_rest_squared(single_qubit_marginal(marginal));
  const double pairs = marginal.params.n_qubits() - 1;

  TangleRecord rec{.params = marginal.params};
  rec.c1_sq = c1_sq;
  rec.c2_sq = c2 * c2;
  rec.tau = c1_sq - pairs * rec.c2_sq;
  rec.n2 = n2;
  rec.xi = c1_sq - pairs * n2 * n2;
  return rec;
}

}  // namespace symtangle
