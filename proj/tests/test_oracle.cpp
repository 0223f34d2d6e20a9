#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "symtangle/error.hpp"
#include "symtangle/marginals.hpp"
#include "symtangle/oracle.hpp"
#include "test_support.hpp"

using namespace symtangle;
using oracle::Complex;
using oracle::FullState;
using oracle::Spinor;
using symtangle::testing::uniform;

namespace {

// Literal sum over all N! orderings of the tensor factors, then normalized.
FullState permutation_sum(int n, int k, const Spinor& eps1, const Spinor& eps2) {
  std::vector<int> slots(n);
  std::iota(slots.begin(), slots.end(), 0);  // slot < n-k holds eps1
  FullState psi{n, std::vector<Complex>(std::size_t{1} << n)};
  do {
    for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
      Complex amp = 1.0;
      for (int q = 0; q < n; ++q) {
        const int bit = static_cast<int>((idx >> (n - 1 - q)) & 1U);
        amp *= slots[q] < n - k ? eps1[bit] : eps2[bit];
      }
      psi.amplitudes[idx] += amp;
    }
  } while (std::next_permutation(slots.begin(), slots.end()));
  const double norm = psi.norm();
  for (auto& v : psi.amplitudes) v /= norm;
  return psi;
}

std::vector<double> a_values() {
  std::vector<double> out;
  for (int i = 0; i <= 10; ++i) out.push_back(i / 10.0);
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("spinors") {
    const Spinor s = Spinor::from_angles(M_PI / 3, 0.7);
    CHECK(std::abs(std::norm(s.c0()) + std::norm(s.c1()) - 1.0) < 1e-14);
    CHECK_THROWS_AS(Spinor(1.0, 1.0), Error);
    const Spinor r = Spinor::real_overlap(0.6);
    CHECK(r.c0() == Complex(0.6));
    CHECK(std::abs(r.c1() - Complex(0.8)) < 1e-15);
  }

  TEST_CASE("dicke_basis_vector examples") {
    const auto triplet = oracle::dicke_basis_vector(2, 1);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(triplet.amplitudes[0]) == 0.0);
    CHECK(std::abs(triplet.amplitudes[1] - h) < 1e-15);
    CHECK(std::abs(triplet.amplitudes[2] - h) < 1e-15);
    CHECK(std::abs(triplet.amplitudes[3]) == 0.0);

    const auto zero = oracle::dicke_basis_vector(3, 0);
    CHECK(zero.amplitudes[0] == Complex(1.0));
    for (std::size_t i = 1; i < 8; ++i) CHECK(zero.amplitudes[i] == Complex(0.0));

    const auto d42 = oracle::dicke_basis_vector(4, 2);
    int nonzero = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      if (std::popcount(i) == 2) {
        CHECK(std::abs(d42.amplitudes[i] - 1.0 / std::sqrt(6.0)) < 1e-15);
        ++nonzero;
      } else {
        CHECK(d42.amplitudes[i] == Complex(0.0));
      }
    }
    CHECK(nonzero == 6);
  }

  TEST_CASE("cap and range errors") {
    auto code = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::Io;
    };
    CHECK(code([] { oracle::dicke_basis_vector(15, 2); }) == ErrorCode::CapExceeded);
    CHECK(code([] { oracle::dicke_basis_vector(13, 2, 12); }) == ErrorCode::CapExceeded);
    CHECK(code([] { oracle::dicke_basis_vector(4, 5); }) == ErrorCode::OutOfRange);
    CHECK(code([] { oracle::expand_state(DickeParams(16, 2, 0.5)); }) == ErrorCode::CapExceeded);
    CHECK(code([] { oracle::symmetrize_two_spinors(4, 4, Spinor::zero(), Spinor::one()); }) ==
          ErrorCode::OutOfRange);
    CHECK_NOTHROW(oracle::dicke_basis_vector(14, 7));
  }

  TEST_CASE("expand_state examples") {
    const auto w = oracle::expand_state(DickeParams(3, 1, 0.0));
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(std::abs(w.amplitudes[i] - (std::popcount(i) == 1 ? 1.0 / std::sqrt(3.0) : 0.0)) < 1e-15);

    for (double a : {0.0, 0.3, 0.8, 1.0}) {
      const double b = std::sqrt(1 - a * a);
      const double norm = std::sqrt(4 * a * a + 2 * b * b);
      const auto psi = oracle::expand_state(DickeParams(2, 1, a));
      CHECK(std::abs(psi.amplitudes[0] - 2 * a / norm) < 1e-14);
      CHECK(std::abs(psi.amplitudes[1] - b / norm) < 1e-14);
      CHECK(std::abs(psi.amplitudes[2] - b / norm) < 1e-14);
      CHECK(std::abs(psi.amplitudes[3]) < 1e-15);
    }

    const auto sep = oracle::expand_state(DickeParams(6, 3, 1.0));
    CHECK(sep.amplitudes[0] == Complex(1.0));
  }

  TEST_CASE("symmetrize_two_spinors examples") {
    const auto w = oracle::symmetrize_two_spinors(3, 1, Spinor::zero(), Spinor::one());
    CHECK(oracle::max_abs_diff(w, oracle::dicke_basis_vector(3, 1)) < 1e-15);

    for (double a : {0.0, 0.25, 0.9}) {
      const double b = std::sqrt(1 - a * a);
      const double norm = std::sqrt(4 * a * a + 2 * b * b);
      const auto psi = oracle::symmetrize_two_spinors(2, 1, Spinor::zero(), Spinor::real_overlap(a));
      CHECK(std::abs(psi.amplitudes[0] - 2 * a / norm) < 1e-14);
      CHECK(std::abs(psi.amplitudes[1] - b / norm) < 1e-14);
      CHECK(std::abs(psi.amplitudes[2] - b / norm) < 1e-14);
    }

    const auto same = oracle::symmetrize_two_spinors(5, 2, Spinor::zero(), Spinor::zero());
    CHECK(std::abs(same.amplitudes[0] - 1.0) < 1e-15);
  }

  TEST_CASE("weight-class collapse equals the literal permutation sum") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k)
        for (int trial = 0; trial < 3; ++trial) {
          const Spinor e1 = Spinor::from_angles(uniform(0, M_PI), uniform(-M_PI, M_PI));
          const Spinor e2 = Spinor::from_angles(uniform(0, M_PI), uniform(-M_PI, M_PI));
          const auto fast = oracle::symmetrize_two_spinors(n, k, e1, e2);
          const auto slow = permutation_sum(n, k, e1, e2);
          CHECK(oracle::max_abs_diff(fast, slow) < 1e-12);
        }
  }

  TEST_CASE("property: symmetrized states are normalized and permutation symmetric") {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = symtangle::testing::uniform_int(2, 10);
      const int k = symtangle::testing::uniform_int(1, n - 1);
      const Spinor e1 = Spinor::from_angles(uniform(0, M_PI), uniform(-M_PI, M_PI));
      const Spinor e2 = Spinor::from_angles(uniform(0, M_PI), uniform(-M_PI, M_PI));
      const auto psi = oracle::symmetrize_two_spinors(n, k, e1, e2);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
      std::vector<Complex> by_weight(n + 1);
      std::vector<bool> seen(n + 1, false);
      for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
        const int w = std::popcount(i);
        if (!seen[w]) {
          by_weight[w] = psi.amplitudes[i];
          seen[w] = true;
        }
        CHECK(std::abs(psi.amplitudes[i] - by_weight[w]) == 0.0);
      }
      // complex marginals are still Hermitian with unit trace
      const auto rho = oracle::partial_trace_pair(psi, 1, 2);
      Complex tr = 0.0;
      for (int i = 0; i < 4; ++i) {
        tr += rho[i][i];
        for (int j = 0; j < 4; ++j) CHECK(std::abs(rho[i][j] - std::conj(rho[j][i])) < 1e-14);
      }
      CHECK(std::abs(tr - 1.0) < 1e-12);
    }
  }

  TEST_CASE("partial traces: examples") {
    const auto w = oracle::expand_state(DickeParams(3, 1, 0.0));
    const double t = 1.0 / 3;
    CHECK(max_abs_diff(oracle::partial_trace_to_two(w),
                       SmallMatrix(4, {t, 0, 0, 0, 0, t, t, 0, 0, t, t, 0, 0, 0, 0, 0})) < 1e-15);
    CHECK(max_abs_diff(oracle::partial_trace_to_one(w), SmallMatrix::diagonal({2.0 / 3, 1.0 / 3})) < 1e-15);

    const auto zeros = oracle::expand_state(DickeParams(5, 2, 1.0));
    SmallMatrix corner(4);
    corner(0, 0) = 1.0;
    CHECK(oracle::partial_trace_to_two(zeros) == corner);
    CHECK(oracle::partial_trace_to_one(zeros) == SmallMatrix::diagonal({1.0, 0.0}));

    const auto bell = oracle::expand_state(DickeParams(2, 1, 0.0));
    const SmallMatrix rho = oracle::partial_trace_to_two(bell);
    CHECK(std::abs((rho * rho).trace() - 1.0) < 1e-15);
    CHECK(max_abs_diff(oracle::partial_trace_to_one(bell), SmallMatrix::diagonal({0.5, 0.5})) < 1e-15);
  }

  TEST_CASE("phased marginals are rejected by the real-valued trace") {
    // a global phase cancels in rho
    const auto global = oracle::symmetrize_two_spinors(3, 1, Spinor::from_angles(M_PI / 3, 0.0),
                                                       Spinor::from_angles(M_PI / 2, M_PI / 2));
    CHECK_NOTHROW(oracle::partial_trace_to_two(global));
    // a relative phase does not
    const Spinor e2(M_SQRT1_2, oracle::Complex(0.0, M_SQRT1_2));
    const auto psi = oracle::symmetrize_two_spinors(3, 1, Spinor::zero(), e2);
    CHECK_THROWS_AS(oracle::partial_trace_to_two(psi), Error);
  }

  TEST_CASE("canonical-form and marginal equivalence for N <= 12") {
    for (int n = 2; n <= 12; ++n)
      for (int k = 1; k <= n / 2; ++k)
        for (double a : a_values()) {
          const DickeParams p(n, k, a);
          const auto canonical = oracle::expand_state(p);
          const auto symmetrized = oracle::symmetrize_two_spinors(n, k, Spinor::zero(), Spinor::real_overlap(a));
          CHECK(oracle::max_abs_diff(canonical, symmetrized) < 1e-12);

          const auto analytic = two_qubit_marginal(p);
          const SmallMatrix rho2 = oracle::partial_trace_to_two(canonical);
          CHECK(max_abs_diff(rho2, marginal_matrix(analytic)) < 1e-12);

          const SmallMatrix rho1 = oracle::partial_trace_to_one(canonical);
          CHECK(max_abs_diff(rho1, single_qubit_marginal(analytic).m) < 1e-12);
          CHECK(max_abs_diff(rho1, partial_trace_4x4(rho2, 1)) < 1e-13);
        }
  }

  TEST_CASE("every qubit pair has the same marginal") {
    for (int n : {3, 5, 8, 10})
      for (int k = 1; k <= n / 2; ++k)
        for (double a : {0.0, 0.4, 0.9}) {
          const auto psi = oracle::expand_state(DickeParams(n, k, a));
          const SmallMatrix ref = oracle::partial_trace_to_two(psi);
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
              if (i == j) continue;
              const auto rho = oracle::partial_trace_pair(psi, i, j);
              for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) CHECK(std::abs(rho[r][c] - ref(r, c)) < 1e-12);
            }
        }
  }
}
