// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantorflat/bounded_real.hpp"
#include "cantorflat/kernel.hpp"
#include "cantorflat/rational.hpp"

namespace cantorflat {

/// Thrown when the metric recurrences degenerate (b_n not certainly positive).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-generation override of the subdivision pattern.
struct GenerationRule {
  int r = 2;
  int s = 2;
  Rational eps;
};

struct ConstructionParams {
  int k = 1;
  int r = 4;
  int s = 3;
  Rational eps = Rational(1, 22);
  /// Optional per-generation schedule: entry i governs the subdivision that
  /// produces generation i+2; past the end the last entry repeats.
  std::vector<GenerationRule> schedule;
  int precision_bits = BoundedReal::kDefaultPrecision;

  bool scheduled() const { return !schedule.empty(); }
  GenerationRule rule_at(int generation) const;

  /// Throws std::invalid_argument when any constraint fails
  /// (k >= 1, r >= 2, s >= 2, 0 < eps < min(1/2, 1/(r*s - 1)), bits >= 16).
  void validate() const;
};

struct GenerationMetrics {
  int n = 1;
  Rational c;    // rectangle width, exact
  Rational d;    // horizontal gap, exact (0 for n = 1)
  BoundedReal a; // rectangle height
  BoundedReal b; // vertical row gap (0 for n = 1)
};

/// Path of (row, column) choices, 1-based; generation = path length + 1.
/// The empty address is the root rectangle [0,1] x [0,1].
struct RectAddress {
  std::vector<std::pair<int, int>> path;

  int generation() const { return static_cast<int>(path.size()) + 1; }
  std::string str() const;
  static RectAddress from_string(const std::string& text);  // "m.p;m.p;..."
};

struct Rect {
  Rational x0;
  Rational width;
  BoundedReal y0;
  BoundedReal height;
};

enum class GapKind { WithinRow, RowTransition };

struct GapSegment {
  Rational x_start;
  Rational x_end;
  BoundedReal y_start;  // value at x_start (corner of the left rectangle)
  BoundedReal y_end;    // value at x_end (corner of the right rectangle)
  int generation = 0;
  GapKind kind = GapKind::WithinRow;
};

struct LocateResult {
  enum class Kind { Gap, Unresolved } kind = Kind::Unresolved;
  std::optional<GapSegment> gap;  // set when kind == Gap
  RectAddress address;            // gap: the parent; unresolved: depth max_depth
  int gap_index = -1;             // traversal position under the parent
};

struct ValidationCheck {
  std::string name;
  int generation = 0;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

/// The nested-rectangle construction for one parameter set. Immutable after
/// construction; generation metrics are memoized lazily and may be filled
/// concurrently (idempotent, mutex-guarded growth with lock-free reads of
/// already-published generations).
class Construction {
 public:
  explicit Construction(ConstructionParams params);

  const ConstructionParams& params() const { return params_; }
  const PhiKernel& kernel() const { return kernel_; }

  /// Metrics of generation n >= 1 (cached).
  const GenerationMetrics& metrics(int n) const;

  /// Children per parent at generation n >= 2 (r_n * s_n).
  int children_per_parent(int n) const;

  /// x offset of child `slot` (0-based traversal order) within its parent.
  Rational child_x_offset(int n, int slot) const;

  /// y offset of row m (1-based) within its parent: (m-1) * (a_n + b_n).
  const BoundedReal& row_y_offset(int n, int m) const;

  Rect rect_of(const RectAddress& address) const;

  /// The r*s - 1 gaps between consecutive children of `parent`, in traversal
  /// order (row 1 left to right, then row 2, ...).
  std::vector<GapSegment> gaps_of(const RectAddress& parent) const;

  /// Descends at most max_depth generations below the root; x must lie in [0,1].
  LocateResult locate(const Rational& x, int max_depth) const;

  /// Structural checks for all generations n <= depth: exact width
  /// telescoping, height telescoping within bounds, b_n > 0, disjoint child
  /// x-intervals, identical row y-intervals and disjoint y-intervals across
  /// rows. Child layout is translation-invariant across parents of a given
  /// generation, so one parent per generation is checked.
  ValidationReport validate_structure(int depth) const;

 private:
  void ensure(int n) const;

  ConstructionParams params_;
  PhiKernel kernel_;
  mutable std::mutex mu_;
  mutable std::deque<GenerationMetrics> metrics_;
  mutable std::deque<std::vector<BoundedReal>> row_offsets_;
  mutable std::atomic<int> ready_{0};
};

}  // namespace cantorflat
