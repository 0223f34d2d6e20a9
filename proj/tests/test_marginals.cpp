#include <doctest.h>

#include <cmath>

#include "symtangle/marginals.hpp"

using namespace symtangle;

namespace {

TwoQubitMarginal elements(int n, int k, double a) { return two_qubit_marginal(DickeParams(n, k, a)); }

std::vector<double> a_values() {
  std::vector<double> out;
  for (int i = 0; i <= 10; ++i) out.push_back(i / 10.0);
  return out;
}

}  // namespace

TEST_SUITE("marginals") {
  TEST_CASE("two_qubit_marginal examples") {
    const auto w = elements(3, 1, 0.0);
    CHECK(w.a_el == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(w.d_el == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(w.b_el == 0.0);
    CHECK(w.c_el == 0.0);
    CHECK(w.e_el == 0.0);
    CHECK(w.f_el == 0.0);

    const auto d4 = elements(4, 2, 0.0);
    CHECK(d4.a_el == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(d4.d_el == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(d4.f_el == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(d4.b_el == 0.0);
    CHECK(d4.c_el == 0.0);
    CHECK(d4.e_el == 0.0);

    for (int n : {2, 5, 30})
      for (int k = 1; k <= n / 2; ++k) {
        const auto sep = elements(n, k, 1.0);
        CHECK(sep.a_el == 1.0);
        CHECK(sep.b_el == 0.0);
        CHECK(sep.c_el == 0.0);
        CHECK(sep.d_el == 0.0);
        CHECK(sep.e_el == 0.0);
        CHECK(sep.f_el == 0.0);
      }
  }

  TEST_CASE("C vanishes when k < 2") {
    for (int n = 2; n <= 30; ++n)
      for (double a : a_values()) CHECK(elements(n, 1, a).c_el == 0.0);
  }

  TEST_CASE("marginal_matrix examples") {
    const SmallMatrix w = marginal_matrix(elements(3, 1, 0.0));
    const double t = 1.0 / 3;
    const SmallMatrix want(4, {t, 0, 0, 0, 0, t, t, 0, 0, t, t, 0, 0, 0, 0, 0});
    CHECK(max_abs_diff(w, want) < 1e-15);

    SmallMatrix corner(4);
    corner(0, 0) = 1.0;
    CHECK(marginal_matrix(elements(6, 3, 1.0)) == corner);

    const TwoQubitMarginal bell{.d_el = 0.5, .params = DickeParams(2, 1, 0.0)};
    const SmallMatrix proj = marginal_matrix(bell);
    CHECK(max_abs_diff(proj * proj, proj) == 0.0);
    CHECK(proj.trace() == 1.0);
  }

  TEST_CASE("single_qubit_marginal examples") {
    const auto w = single_qubit_marginal(elements(3, 1, 0.0)).m;
    CHECK(max_abs_diff(w, SmallMatrix::diagonal({2.0 / 3, 1.0 / 3})) < 1e-15);
    const auto d4 = single_qubit_marginal(elements(4, 2, 0.0)).m;
    CHECK(max_abs_diff(d4, SmallMatrix::diagonal({0.5, 0.5})) < 1e-15);
    CHECK(single_qubit_marginal(elements(9, 4, 1.0)).m == SmallMatrix::diagonal({1.0, 0.0}));
  }

  TEST_CASE("partial_transpose examples") {
    const double t = 1.0 / 3;
    const SmallMatrix w = partial_transpose(elements(3, 1, 0.0));
    CHECK(max_abs_diff(w, SmallMatrix(4, {t, 0, 0, t, 0, t, 0, 0, 0, 0, t, 0, t, 0, 0, 0})) < 1e-15);

    const double s = 1.0 / 6;
    const SmallMatrix d4 = partial_transpose(elements(4, 2, 0.0));
    CHECK(max_abs_diff(d4, SmallMatrix(4, {s, 0, 0, t, 0, t, 0, 0, 0, 0, t, 0, t, 0, 0, s})) < 1e-15);

    const auto sep = elements(5, 2, 1.0);
    CHECK(partial_transpose(sep) == marginal_matrix(sep));
  }

  TEST_CASE("closed-form partial transpose matches the index rule") {
    for (int n = 2; n <= 40; n += 3)
      for (int k = 1; k <= n / 2; ++k)
        for (double a : a_values()) {
          const auto m = elements(n, k, a);
          CHECK(max_abs_diff(partial_transpose(m), partial_transpose(marginal_matrix(m))) == 0.0);
        }
  }

  TEST_CASE("property: trace, exchange symmetry, consistency, PSD") {
    for (int n = 2; n <= 60; ++n)
      for (int k = 1; k <= n / 2; ++k)
        for (double a : a_values()) {
          const auto m = elements(n, k, a);
          const SmallMatrix rho = marginal_matrix(m);
          CHECK(std::abs(m.a_el + 2 * m.d_el + m.f_el - 1.0) <= 1e-12);
          CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
          CHECK(std::abs(partial_transpose(m).trace() - 1.0) <= 1e-12);
          CHECK(m.a_el >= 0.0);
          CHECK(m.d_el >= 0.0);
          CHECK(m.f_el >= 0.0);

          for (int i = 0; i < 4; ++i) {
            CHECK(rho(1, i) == rho(2, i));
            CHECK(rho(i, 1) == rho(i, 2));
          }

          const SmallMatrix rho1 = single_qubit_marginal(m).m;
          CHECK(max_abs_diff(partial_trace_4x4(rho, 0), rho1) <= 1e-14);
          CHECK(max_abs_diff(partial_trace_4x4(rho, 1), rho1) <= 1e-14);

          const auto ev = sym_eigenvalues(rho);
          CHECK(ev.back() >= -1e-10);
          if (a == 1.0) CHECK(ev[1] < 1e-12);
        }
  }
}
