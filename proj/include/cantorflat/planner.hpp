// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cantorflat/geometry.hpp"

namespace cantorflat {

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanRequest {
  int k = 1;
  Rational alpha_target;  // in (0,1)
  Rational eta;           // > 0
  int max_s = 64;
  int max_r = 4096;
  int precision_bits = BoundedReal::kDefaultPrecision;
};

struct CertificateEntry {
  std::string name;
  BoundedReal margin;  // must be certainly positive for the entry to hold
  bool holds = false;
};

struct Certificate {
  std::vector<CertificateEntry> entries;
  bool all_hold() const;
};

struct PlanResult {
  ConstructionParams params;
  BoundedReal achieved_alpha;
  BoundedReal achieved_beta;
  Certificate certificate;
};

/// Finds (r, s, eps) whose construction pushes the level-set dimension just
/// above alpha_target while the image-set dimension stays within eta of the
/// attainable limit:
///   - scan s upward from 2, r upward from the smallest integer with
///     log_s r / (1 + log_s r) > alpha_target (the window closes when that
///     ratio reaches alpha_target + eta);
///   - halve eps downward from min(1/2, 1/(r*s-1))/2 until all certificate
///     inequalities hold with certainly-positive margins.
/// Deterministic: the first (s, r, eps) in that order wins.
PlanResult plan(const PlanRequest& request);

/// Re-evaluates the certificate for existing parameters at twice their
/// precision. All margins must come out certainly positive for success.
Certificate certify(const ConstructionParams& params, const Rational& alpha_target,
                    const Rational& eta);

}  // namespace cantorflat
