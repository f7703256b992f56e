// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/kernel.hpp"

#include <stdexcept>
#include <utility>

namespace cantorflat {

namespace {

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<Rational> derive_poly(const std::vector<Rational>& coeffs) {
  std::vector<Rational> out;
  if (coeffs.size() <= 1) return out;
  out.reserve(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    out.push_back(coeffs[i] * Rational(static_cast<long>(i)));
  }
  return out;
}

void check_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("kernel: x outside [0,1]");
  }
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(unsigned long n, unsigned long i) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, i);
  return b;
}

}  // namespace

PhiKernel make_kernel(int k) {
  if (k < 1) throw std::invalid_argument("kernel: k must be >= 1");
  PhiKernel kernel;
  kernel.k = k;
  // Beta integral: int_0^1 t^k (1-t)^k dt = (k!)^2 / (2k+1)!.
  kernel.normalizer = Rational(factorial(k) * factorial(k), factorial(2 * k + 1));

  // Term-by-term integration of the binomial expansion of t^k (1-t)^k:
  //   phi(x) = 1 - (1/normalizer) * sum_i C(k,i) (-1)^i x^(k+i+1) / (k+i+1).
  kernel.poly_coeffs.assign(static_cast<std::size_t>(2 * k + 2), Rational(0));
  kernel.poly_coeffs[0] = Rational(1);
  for (int i = 0; i <= k; ++i) {
    Rational term(binomial(k, i), mpz_class(k + i + 1));
    if (i % 2 == 1) term = -term;
    kernel.poly_coeffs[static_cast<std::size_t>(k + i + 1)] = -(term / kernel.normalizer);
  }

  kernel.k_bound = compute_K(kernel);
  return kernel;
}

Rational phi_eval(const PhiKernel& kernel, const Rational& x) {
  check_unit_interval(x);
  return eval_poly(kernel.poly_coeffs, x);
}

Rational phi_derivative(const PhiKernel& kernel, int j, const Rational& x) {
  if (j < 1) throw std::invalid_argument("kernel: derivative order must be >= 1");
  check_unit_interval(x);
  std::vector<Rational> coeffs = kernel.poly_coeffs;
  for (int i = 0; i < j && !coeffs.empty(); ++i) {
    coeffs = derive_poly(coeffs);
  }
  if (coeffs.empty()) return Rational(0);
  return eval_poly(coeffs, x);
}

Rational compute_K(const PhiKernel& kernel) {
  // p = phi^(k) (degree k+1), q = p' = phi^(k+1) (degree k).
  std::vector<Rational> p = kernel.poly_coeffs;
  for (int i = 0; i < kernel.k; ++i) p = derive_poly(p);
  const std::vector<Rational> q = derive_poly(p);

  // q has exactly k simple roots in (0,1): phi' is a constant multiple of
  // t^k (1-t)^k, whose k-th derivative has k interior sign changes.
  Rational lipschitz(0);
  for (const Rational& c : q) lipschitz += c.abs();

  mpz_class two40(1);
  mpz_mul_2exp(two40.get_mpz_t(), two40.get_mpz_t(), 40);
  const Rational bisect_width(mpz_class(1), two40);

  long grid = 64;
  std::vector<std::pair<Rational, Rational>> brackets;  // [lo, hi], hi-lo <= 2^-40 after refinement
  while (true) {
    brackets.clear();
    Rational prev_x(0);
    Rational prev_q = eval_poly(q, prev_x);
    bool prev_zero = prev_q.is_zero();
    if (prev_zero) brackets.emplace_back(prev_x, prev_x);
    for (long j = 1; j <= grid; ++j) {
      const Rational x(j, grid);
      const Rational qx = eval_poly(q, x);
      if (qx.is_zero()) {
        brackets.emplace_back(x, x);
        prev_x = x;
        prev_q = qx;
        prev_zero = true;
        continue;
      }
      if (!prev_zero && prev_q.sign() != qx.sign()) {
        brackets.emplace_back(prev_x, x);
      }
      prev_x = x;
      prev_q = qx;
      prev_zero = false;
    }
    if (static_cast<int>(brackets.size()) >= kernel.k) break;
    grid *= 2;
    if (grid > (1L << 22)) {
      throw std::logic_error("kernel: failed to bracket the derivative extrema");
    }
  }

  // Exact sign-change bisection of each bracket down to width 2^-40.
  for (auto& [lo, hi] : brackets) {
    if (lo == hi) continue;
    Rational qlo = eval_poly(q, lo);
    while (hi - lo > bisect_width) {
      const Rational mid = (lo + hi) / Rational(2);
      const Rational qmid = eval_poly(q, mid);
      if (qmid.is_zero()) {
        lo = mid;
        hi = mid;
        break;
      }
      if (qmid.sign() == qlo.sign()) {
        lo = mid;
        qlo = qmid;
      } else {
        hi = mid;
      }
    }
  }

  Rational best = max(eval_poly(p, Rational(0)).abs(), eval_poly(p, Rational(1)).abs());
  for (const auto& [lo, hi] : brackets) {
    Rational local = max(eval_poly(p, lo).abs(), eval_poly(p, hi).abs());
    if (lo != hi) local += lipschitz * (hi - lo);
    best = max(best, local);
  }
  return best;
}

}  // namespace cantorflat
