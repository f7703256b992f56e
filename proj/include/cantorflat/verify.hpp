// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cantorflat/geometry.hpp"

namespace cantorflat {

struct VerifyOptions {
  int depth = 6;
  /// Test hook: feeds a sign-flipped b_2 into the checks to prove the suite
  /// actually fails on broken metrics.
  bool inject_negative_b = false;
};

/// Full invariant suite at the configured depth: structural geometry checks,
/// link-curve endpoint interpolation and range containment, the lambda
/// identity, cover nesting, and (constant schedules only) agreement of the
/// consecutive-scale dimension slopes with the closed forms.
ValidationReport verify_suite(const Construction& cons, const VerifyOptions& options);

}  // namespace cantorflat
