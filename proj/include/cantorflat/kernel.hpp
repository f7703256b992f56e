// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "cantorflat/rational.hpp"

namespace cantorflat {

/// The link kernel: the unique degree-(2k+1) polynomial that decreases from
/// 1 at x=0 to 0 at x=1 with derivatives 1..k vanishing at both endpoints,
///   phi(x) = 1 - (integral_0^x t^k (1-t)^k dt) / normalizer.
/// All coefficients are exact rationals.
struct PhiKernel {
  int k = 0;
  Rational normalizer;               // (k!)^2 / (2k+1)!
  std::vector<Rational> poly_coeffs; // ascending, degree 2k+1
  Rational k_bound;                  // certified upper bound on sup |phi^(k)| over [0,1]
};

/// Builds the kernel for smoothness order k >= 1.
PhiKernel make_kernel(int k);

/// Exact value of phi at x in [0,1].
Rational phi_eval(const PhiKernel& kernel, const Rational& x);

/// Exact j-th derivative of phi at x in [0,1], j >= 1.
Rational phi_derivative(const PhiKernel& kernel, int j, const Rational& x);

/// Certified upper bound on sup over [0,1] of |phi^(k)|, tight to within 1%.
/// Extrema are bracketed by exact sign-change bisection of phi^(k+1) down to
/// width 2^-40; the Lipschitz slack of the unresolved bracket widths is added.
Rational compute_K(const PhiKernel& kernel);

}  // namespace cantorflat
