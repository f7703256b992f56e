#include <doctest.h>

#include "cantorflat/kernel.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace cantorflat;
using testsupport::parse_decimal;
using testsupport::phi_reference;
using testsupport::Rng;

TEST_CASE("k=1 kernel in closed form") {
  const PhiKernel kernel = make_kernel(1);
  CHECK(kernel.normalizer == Rational(1, 6));
  // phi(x) = 1 - 3x^2 + 2x^3
  REQUIRE(kernel.poly_coeffs.size() == 4);
  CHECK(kernel.poly_coeffs[0] == Rational(1));
  CHECK(kernel.poly_coeffs[1] == Rational(0));
  CHECK(kernel.poly_coeffs[2] == Rational(-3));
  CHECK(kernel.poly_coeffs[3] == Rational(2));
  CHECK(phi_eval(kernel, Rational(1, 2)) == Rational(1, 2));
  // phi'(x) = -6x + 6x^2
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Rational x = rng.rational01(1000);
    CHECK(phi_derivative(kernel, 1, x) == Rational(-6) * x + Rational(6) * x * x);
  }
  CHECK(phi_derivative(kernel, 1, Rational(1, 2)) == Rational(-3, 2));
}

TEST_CASE("endpoint values and flatness") {
  for (int k = 1; k <= 5; ++k) {
    const PhiKernel kernel = make_kernel(k);
    CHECK(phi_eval(kernel, Rational(0)) == Rational(1));
    CHECK(phi_eval(kernel, Rational(1)) == Rational(0));
    for (int j = 1; j <= k; ++j) {
      CHECK(phi_derivative(kernel, j, Rational(0)) == Rational(0));
      CHECK(phi_derivative(kernel, j, Rational(1)) == Rational(0));
    }
    // Order k+1 derivatives do not vanish at the endpoints.
    CHECK(phi_derivative(kernel, k + 1, Rational(0)) != Rational(0));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(make_kernel(0), std::invalid_argument);
  const PhiKernel kernel = make_kernel(2);
  CHECK_THROWS_AS(phi_eval(kernel, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(phi_eval(kernel, Rational(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(phi_derivative(kernel, 0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("phi matches independent term summation") {
  Rng rng(123);
  for (int k = 1; k <= 3; ++k) {
    const PhiKernel kernel = make_kernel(k);
    for (int i = 0; i < 1000; ++i) {
      const Rational x = rng.rational01(100000);
      CHECK(phi_eval(kernel, x) == phi_reference(k, x));
    }
  }
}

TEST_CASE("phi decreases strictly") {
  Rng rng(5);
  for (int k = 1; k <= 4; ++k) {
    const PhiKernel kernel = make_kernel(k);
    for (int i = 0; i < 200; ++i) {
      Rational x = rng.rational01(100000);
      Rational y = rng.rational01(100000);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      CHECK(phi_eval(kernel, x) > phi_eval(kernel, y));
    }
  }
}

TEST_CASE("central differences approximate phi'") {
  // For k=1 phi is cubic, so the central-difference defect is exactly
  // phi'''/6 * h^2 = 2 h^2.
  const PhiKernel k1 = make_kernel(1);
  for (long denom : {64L, 128L, 256L}) {
    const Rational h(1, denom);
    const Rational x(1, 3);
    const Rational diff = (phi_eval(k1, x + h) - phi_eval(k1, x - h)) / (Rational(2) * h);
    CHECK(diff - phi_derivative(k1, 1, x) == Rational(2) * h * h);
  }
  // Higher k: defect shrinks by ~4x per halving of h.
  const PhiKernel k3 = make_kernel(3);
  const Rational x(2, 7);
  auto defect = [&](const Rational& h) {
    const Rational diff = (phi_eval(k3, x + h) - phi_eval(k3, x - h)) / (Rational(2) * h);
    return (diff - phi_derivative(k3, 1, x)).abs();
  };
  const Rational d1 = defect(Rational(1, 64));
  const Rational d2 = defect(Rational(1, 128));
  CHECK(d2 * Rational(3) < d1);
  CHECK(d1 < d2 * Rational(5));
}

TEST_CASE("certified derivative bound") {
  // k=1: |phi'| peaks at x = 1/2 with value 3/2, found exactly.
  const PhiKernel k1 = make_kernel(1);
  CHECK(k1.k_bound == Rational(3, 2));
  CHECK(compute_K(k1) == Rational(3, 2));

  // K dominates any sampled |phi^(k)| value and is tight to 1% against the
  // frozen reference suprema.
  const char* const refs[] = {refvals::kKernelSup_k2, refvals::kKernelSup_k3,
                              refvals::kKernelSup_k4};
  for (int k = 2; k <= 4; ++k) {
    const PhiKernel kernel = make_kernel(k);
    const Rational ref = parse_decimal(refs[k - 2]);
    CHECK(kernel.k_bound >= ref - Rational(1, 10).pow(40));
    CHECK(kernel.k_bound <= ref * Rational(101, 100));
    CHECK(kernel.k_bound >= phi_derivative(kernel, k, Rational(1, 2)).abs());
    Rng rng(900 + k);
    for (int i = 0; i < 200; ++i) {
      CHECK(kernel.k_bound >= phi_derivative(kernel, k, rng.rational01(10000)).abs());
    }
  }
}
