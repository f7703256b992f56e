// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorflat/geometry.hpp"

namespace cantorflat {

/// One row index per generation (1-based); length n-1 selects a generation-n
/// horizontal band, i.e. a point neighborhood of the image Cantor set.
struct RowAddress {
  std::vector<int> rows;

  std::string str() const;
  static RowAddress from_string(const std::string& text);  // "m,m,m"
};

enum class CoverTarget { A, D, LevelSet, LevelSetTight };

/// Closed interval with rigorous rational outer endpoints. `pad` is the total
/// enclosure slack folded into [lo, hi] (zero for exact covers).
struct CoverInterval {
  Rational lo;
  Rational hi;
};

struct CoverSet {
  CoverTarget target = CoverTarget::A;
  int generation = 1;
  std::optional<RowAddress> row_address;  // level-set targets only
  bool exact = false;                     // endpoints exact rationals?
  std::vector<CoverInterval> intervals;   // sorted, pairwise disjoint
  BoundedReal nominal_length;             // c_n, lambda*c_n, or a_n
};

/// x-projections of the generation-n rectangles: (r*s)^(n-1) intervals of
/// exact length c_n.
CoverSet cover_A(const Construction& cons, int n);

/// y-projections of the generation-n rows: s^(n-1) intervals of length a_n
/// (rigorous outer hulls).
CoverSet cover_D(const Construction& cons, int n);

/// Cover of a level set at generation n = len(row_addr) + 1: the x-intervals
/// of the rectangles whose row index matches row_addr at every level
/// (r^(n-1) intervals of length c_n). The tight variant shrinks each to
/// length lambda * c_n, lambda = (r-1)/(r*s-1), anchored at the x-start of
/// the interval's first next-generation rectangle.
CoverSet cover_level_set(const Construction& cons, const RowAddress& row_addr, bool tight);

/// lambda = (r-1)/(r*s-1) for the subdivision producing generation n.
Rational lambda_ratio(const Construction& cons, int n);

struct YInterval {
  BoundedReal lo;
  BoundedReal hi;
  int generation = 1;
};

/// The depth-n member of the nested y-interval family selected by row_addr
/// (heights a_n; the intersection is the unique image point with that
/// address). Requires depth <= len(row_addr) + 1.
YInterval point_of_row_address(const Construction& cons, const RowAddress& row_addr, int depth);

enum class Membership { Yes, No, Unresolved };

/// Sound membership query for the critical set (target A, exact) or the image
/// set (target D, within error bounds; inconclusive comparisons return
/// Unresolved). `Yes` is only produced for exactly-recognizable points.
Membership membership(const Construction& cons, const Rational& value, CoverTarget target,
                      int depth);

/// Minimal number of half-open boxes of length `scale` needed to cover the
/// union of the cover's intervals (each interval taken as [lo, hi)), computed
/// by an exact greedy sweep. A single interval costs ceil(length/scale).
long long box_count(const CoverSet& cover, const Rational& scale);

struct DimensionReport {
  BoundedReal alpha;            // level-set dimension
  BoundedReal beta;             // image-set dimension
  Rational lambda;              // (r-1)/(r*s-1), exact
  BoundedReal dim_A;            // log(rs)/log(rs/(1-eps))
  std::string dim_A_note;       // provenance of the dim_A formula
  BoundedReal boxcount_alpha;   // consecutive-scale estimate
  BoundedReal boxcount_beta;
  bool upper_bound_holds = false;     // beta < (1-alpha)/k certainly
  BoundedReal upper_bound_margin;     // (1-alpha)/k - beta
};

/// Closed-form dimensions (constant schedule only):
///   alpha = log_s r / (1 + log_s(r/(1-eps)))
///   beta  = 1 / ((k+eps)(1 + log_s(r/(1-eps))))
/// plus consecutive-scale box-count estimates over generations
/// [est_lo, est_hi] and the beta <= (1-alpha)/k consistency check.
DimensionReport closed_form_dimensions(const Construction& cons, int est_lo = 3, int est_hi = 8);

/// Consecutive-scale slopes log(N_{n+1}/N_n) / log(len_n / len_{n+1}) for
/// n in [n_lo, n_hi - 1], using the natural covers
/// (A: N=(rs)^(n-1), len=c_n; D: N=s^(n-1), len=a_n;
///  level set: N=r^(n-1), len=lambda*c_n).
std::vector<BoundedReal> dimension_slopes(const Construction& cons, CoverTarget target,
                                          int n_lo, int n_hi);

/// Mean of the consecutive-scale slopes (they are constant from n=3 on for
/// constant schedules).
BoundedReal estimate_dimension(const Construction& cons, CoverTarget target, int n_lo, int n_hi);

/// Least-squares slope of log N against log(1/len) over [n_lo, n_hi]; the
/// estimator of choice for scheduled constructions.
BoundedReal estimate_dimension_lsq(const Construction& cons, CoverTarget target, int n_lo,
                                   int n_hi);

}  // namespace cantorflat
