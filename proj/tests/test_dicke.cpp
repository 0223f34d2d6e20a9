#include <doctest.h>

#include <chrono>
#include <cmath>

#include "symtangle/dicke.hpp"
#include "symtangle/error.hpp"

using namespace symtangle;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Direct evaluation of the unnormalized amplitudes with plain factorials,
// then normalized. Only usable while the factorials stay finite.
std::vector<double> direct_amplitudes(int n, int k, double a) {
  const double b = std::sqrt(1.0 - a * a);
  std::vector<double> beta(k + 1);
  double norm = 0.0;
  for (int r = 0; r <= k; ++r) {
    beta[r] = std::sqrt(factorial(n) * factorial(n - r) / factorial(r)) * std::pow(a, k - r) * std::pow(b, r) /
              (factorial(n - k) * factorial(k - r));
    norm += beta[r] * beta[r];
  }
  for (double& v : beta) v /= std::sqrt(norm);
  return beta;
}

double sum_sq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST_SUITE("dicke") {
  TEST_CASE("DickeParams invariants") {
    const DickeParams p(5, 2, 0.6);
    CHECK(p.complement() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_THROWS_AS(DickeParams(1, 1, 0.5), Error);
    CHECK_THROWS_AS(DickeParams(5, 3, 0.5), Error);
    CHECK_THROWS_AS(DickeParams(5, 0, 0.5), Error);
    CHECK_THROWS_AS(DickeParams(4, 2, -0.1), Error);
    CHECK_THROWS_AS(DickeParams(4, 2, 1.0000001), Error);
    CHECK_THROWS_AS(DickeParams(4, 2, NAN), Error);
    CHECK_NOTHROW(DickeParams(4, 2, 0.0));
    CHECK_NOTHROW(DickeParams(4, 2, 1.0));
    try {
      DickeParams(3, 2, 0.5);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
    }
  }

  TEST_CASE("cg_coefficients examples") {
    for (int n : {2, 3, 7, 50}) {
      const auto c = cg_coefficients(n, 0);
      CHECK(c.c_plus == 1.0);
      CHECK(c.c_zero == 0.0);
      CHECK(c.c_minus == 0.0);
    }
    const auto c31 = cg_coefficients(3, 1);
    CHECK(c31.c_plus == doctest::Approx(std::sqrt(1.0 / 3)).epsilon(1e-15));
    CHECK(c31.c_zero == doctest::Approx(std::sqrt(2.0 / 3)).epsilon(1e-15));
    CHECK(c31.c_minus == 0.0);
    const auto c42 = cg_coefficients(4, 2);
    CHECK(c42.c_plus == doctest::Approx(std::sqrt(1.0 / 6)).epsilon(1e-15));
    CHECK(c42.c_zero == doctest::Approx(std::sqrt(2.0 / 3)).epsilon(1e-15));
    CHECK(c42.c_minus == doctest::Approx(std::sqrt(1.0 / 6)).epsilon(1e-15));
    // r = N: only m2 = -1 survives
    const auto cnn = cg_coefficients(6, 6);
    CHECK(cnn.c_plus == 0.0);
    CHECK(cnn.c_zero == 0.0);
    CHECK(cnn.c_minus == 1.0);
  }

  TEST_CASE("cg_coefficients rejects out-of-range input") {
    CHECK_THROWS_AS(cg_coefficients(4, -1), Error);
    CHECK_THROWS_AS(cg_coefficients(4, 5), Error);
    CHECK_THROWS_AS(cg_coefficients(1, 0), Error);
  }

  TEST_CASE("property: cg triples are normalized for 2 <= N <= 200") {
    for (int n = 2; n <= 200; ++n)
      for (int r = 0; r <= n; ++r) {
        const auto c = cg_coefficients(n, r);
        const double norm = c.c_plus * c.c_plus + c.c_zero * c.c_zero + c.c_minus * c.c_minus;
        CHECK(std::abs(norm - 1.0) <= 1e-14);
        for (double v : {c.c_plus, c.c_zero, c.c_minus}) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
      }
  }

  TEST_CASE("amplitudes examples") {
    for (double a : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      const double b = std::sqrt(1.0 - a * a);
      const double norm = std::sqrt(4 * a * a + 2 * b * b);
      const auto amp = amplitudes(DickeParams(2, 1, a));
      CHECK(amp.beta[0] == doctest::Approx(2 * a / norm).epsilon(1e-14));
      CHECK(amp.beta[1] == doctest::Approx(std::sqrt(2.0) * b / norm).epsilon(1e-14));
    }

    const auto amp3 = amplitudes(DickeParams(3, 1, 1.0 / std::sqrt(2.0)));
    CHECK(amp3.beta[0] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
    CHECK(amp3.beta[1] == doctest::Approx(0.5).epsilon(1e-14));

    const auto amp100 = amplitudes(DickeParams(100, 50, 1.0));
    CHECK(amp100.beta[0] == 1.0);
    for (int r = 1; r <= 50; ++r) CHECK(amp100.beta[r] == 0.0);
  }

  TEST_CASE("amplitudes agree with direct factorial evaluation for small N") {
    for (int n = 2; n <= 20; ++n)
      for (int k = 1; k <= n / 2; ++k)
        for (double a : {0.05, 0.3, 0.5, 0.77, 0.99}) {
          const auto got = amplitudes(DickeParams(n, k, a)).beta;
          const auto want = direct_amplitudes(n, k, a);
          for (int r = 0; r <= k; ++r) CHECK(std::abs(got[r] - want[r]) < 1e-12);
        }
  }

  TEST_CASE("property: amplitudes are normalized and non-negative") {
    for (int n = 2; n <= 200; ++n)
      for (int k = 1; k <= n / 2; ++k)
        for (int i = 0; i <= 20; ++i) {
          const auto amp = amplitudes(DickeParams(n, k, i / 20.0));
          REQUIRE(static_cast<int>(amp.beta.size()) == k + 1);
          CHECK(std::abs(sum_sq(amp.beta) - 1.0) <= 1e-12);
          for (double v : amp.beta) CHECK(v >= 0.0);
        }
  }

  TEST_CASE("endpoint degeneration") {
    for (int n = 2; n <= 40; ++n)
      for (int k = 1; k <= n / 2; ++k) {
        const auto dicke = amplitudes(DickeParams(n, k, 0.0)).beta;
        const auto product = amplitudes(DickeParams(n, k, 1.0)).beta;
        for (int r = 0; r <= k; ++r) {
          CHECK(dicke[r] == (r == k ? 1.0 : 0.0));
          CHECK(product[r] == (r == 0 ? 1.0 : 0.0));
        }
      }
  }

  TEST_CASE("large N stays finite") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto amp = amplitudes(DickeParams(200, 100, 0.5));
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    for (double v : amp.beta) CHECK(std::isfinite(v));
    CHECK(std::abs(sum_sq(amp.beta) - 1.0) <= 1e-10);
    CHECK(elapsed < std::chrono::milliseconds(10));

    const auto huge = amplitudes(DickeParams(10000, 37, 0.3));
    CHECK(std::abs(sum_sq(huge.beta) - 1.0) <= 1e-12);
  }

  TEST_CASE("log_factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
    // both branches agree with lgamma; the seam step is exact up to a few ulp of ~3e4
    for (int n : {4095, 4096, 4097, 100000})
      CHECK(log_factorial(n) == doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-15));
    const double step = log_factorial(4096) - log_factorial(4095);
    CHECK(std::abs(step - std::log(4096.0)) < 2e-11);
    CHECK_THROWS_AS(log_factorial(-1), Error);
  }
}
