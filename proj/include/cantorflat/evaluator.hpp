// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cantorflat/geometry.hpp"

namespace cantorflat {

enum class PointClass { Gap, Cantor, OutsideLeft, OutsideRight };

struct EvalResult {
  BoundedReal value;
  int depth_used = 0;
  PointClass cls = PointClass::Cantor;
  std::optional<GapSegment> gap;      // set when cls == Gap
  std::optional<RectAddress> address; // set when cls == Cantor (partial address)
};

/// Evaluates f at x in [-2,2] with total error <= tol plus arithmetic error.
///
/// On [0,1] the descent stops as soon as x falls in a gap (the exact link
/// formula applies, arithmetic error only), or at the first generation whose
/// rectangle height drops below tol (the midpoint of that rectangle's
/// y-interval is returned, truncation error a_n/2). Exact corner hits
/// short-circuit: those points lie in the critical set with known value.
/// On [-2,0): f(x) = -(-x)^(k+1); on (1,2]: f(x) = 1 + (x-1)^(k+1).
EvalResult evaluate(const Construction& cons, const Rational& x, const Rational& tol);

/// Evaluates on `count` equally spaced abscissae from x_lo to x_hi inclusive.
std::vector<std::pair<Rational, EvalResult>> evaluate_grid(
    const Construction& cons, const Rational& x_lo, const Rational& x_hi, int count,
    const Rational& tol);

/// Forward finite difference of given order: Delta^order f(x; h) / h^order,
/// with f evaluated to tolerance h^(order+2). Requires 1 <= order <= k and
/// the stencil [x, x + order*h] inside [-2,2].
BoundedReal kth_diff(const Construction& cons, const Rational& x, const Rational& h, int order);

struct FlatnessProbeEntry {
  Rational h;
  BoundedReal diff;
};

struct FlatnessReport {
  RectAddress address;
  Rational x;          // the probed critical-set point (bottom-left limit)
  Rational gap_scale;  // d_{g+1}: the first gap width below the address
  std::vector<std::vector<FlatnessProbeEntry>> per_order;  // index 0 = order 1
  std::vector<bool> decays;  // per order: |diff| bounds shrink monotonically once h < gap_scale
};

/// Probes decay of finite differences of orders 1..k at the critical-set
/// point under `address`, over the given step schedule (descending h).
FlatnessReport flatness_probe(const Construction& cons, const RectAddress& address,
                              const std::vector<Rational>& h_schedule);

}  // namespace cantorflat
