// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/covers.hpp"

#include <sstream>
#include <stdexcept>

namespace cantorflat {

namespace {

constexpr long kMaxMaterializedIntervals = 4'000'000;

void check_materializable(const mpz_class& count) {
  if (count > kMaxMaterializedIntervals) {
    throw std::invalid_argument("cover: " + count.get_str() +
                                " intervals is too large to materialize");
  }
}

}  // namespace

std::string RowAddress::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << ',';
    out << rows[i];
  }
  return out.str();
}

RowAddress RowAddress::from_string(const std::string& text) {
  RowAddress addr;
  if (text.empty()) return addr;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    addr.rows.push_back(std::stoi(item));
  }
  return addr;
}

CoverSet cover_A(const Construction& cons, int n) {
  if (n < 1) throw std::invalid_argument("cover_A: generation must be >= 1");
  mpz_class expected(1);
  for (int g = 2; g <= n; ++g) expected *= cons.children_per_parent(g);
  check_materializable(expected);

  std::vector<Rational> starts{Rational(0)};
  for (int g = 2; g <= n; ++g) {
    const int kids = cons.children_per_parent(g);
    std::vector<Rational> next;
    next.reserve(starts.size() * static_cast<std::size_t>(kids));
    for (const Rational& x : starts) {
      for (int slot = 0; slot < kids; ++slot) {
        next.push_back(x + cons.child_x_offset(g, slot));
      }
    }
    starts = std::move(next);
  }

  CoverSet cover;
  cover.target = CoverTarget::A;
  cover.generation = n;
  cover.exact = true;
  const Rational len = cons.metrics(n).c;
  cover.nominal_length = BoundedReal::exact(len, cons.params().precision_bits);
  cover.intervals.reserve(starts.size());
  for (Rational& x : starts) {
    Rational hi = x + len;
    cover.intervals.push_back(CoverInterval{std::move(x), std::move(hi)});
  }
  return cover;
}

CoverSet cover_D(const Construction& cons, int n) {
  if (n < 1) throw std::invalid_argument("cover_D: generation must be >= 1");
  mpz_class expected(1);
  for (int g = 2; g <= n; ++g) expected *= cons.params().rule_at(g).s;
  check_materializable(expected);

  const int bits = cons.params().precision_bits;
  std::vector<BoundedReal> starts{BoundedReal::exact(Rational(0), bits)};
  for (int g = 2; g <= n; ++g) {
    const int s = cons.params().rule_at(g).s;
    std::vector<BoundedReal> next;
    next.reserve(starts.size() * static_cast<std::size_t>(s));
    for (const BoundedReal& y : starts) {
      for (int m = 1; m <= s; ++m) {
        next.push_back(y + cons.row_y_offset(g, m));
      }
    }
    starts = std::move(next);
  }

  CoverSet cover;
  cover.target = CoverTarget::D;
  cover.generation = n;
  cover.exact = false;
  const BoundedReal& a = cons.metrics(n).a;
  cover.nominal_length = a;
  cover.intervals.reserve(starts.size());
  for (const BoundedReal& y : starts) {
    cover.intervals.push_back(CoverInterval{y.lower(), (y + a).upper()});
  }
  return cover;
}

Rational lambda_ratio(const Construction& cons, int n) {
  const GenerationRule rule = cons.params().rule_at(n);
  return Rational(rule.r - 1, static_cast<long>(rule.r) * rule.s - 1);
}

CoverSet cover_level_set(const Construction& cons, const RowAddress& row_addr, bool tight) {
  const int n = static_cast<int>(row_addr.rows.size()) + 1;
  if (tight && cons.params().scheduled()) {
    throw std::domain_error("cover_level_set: tight covers need a constant schedule");
  }
  mpz_class expected(1);
  for (int g = 2; g <= n; ++g) expected *= cons.params().rule_at(g).r;
  check_materializable(expected);

  std::vector<Rational> starts{Rational(0)};
  for (int g = 2; g <= n; ++g) {
    const GenerationRule rule = cons.params().rule_at(g);
    const int row = row_addr.rows[static_cast<std::size_t>(g - 2)];
    if (row < 1 || row > rule.s) {
      throw std::out_of_range("cover_level_set: row index " + std::to_string(row) +
                              " out of range at generation " + std::to_string(g));
    }
    std::vector<Rational> next;
    next.reserve(starts.size() * static_cast<std::size_t>(rule.r));
    for (const Rational& x : starts) {
      for (int p = 0; p < rule.r; ++p) {
        next.push_back(x + cons.child_x_offset(g, (row - 1) * rule.r + p));
      }
    }
    starts = std::move(next);
  }

  CoverSet cover;
  cover.target = tight ? CoverTarget::LevelSetTight : CoverTarget::LevelSet;
  cover.generation = n;
  cover.row_address = row_addr;
  cover.exact = true;
  Rational len = cons.metrics(n).c;
  if (tight) len = lambda_ratio(cons, n + 1) * len;
  cover.nominal_length = BoundedReal::exact(len, cons.params().precision_bits);
  cover.intervals.reserve(starts.size());
  for (Rational& x : starts) {
    Rational hi = x + len;
    cover.intervals.push_back(CoverInterval{std::move(x), std::move(hi)});
  }
  return cover;
}

YInterval point_of_row_address(const Construction& cons, const RowAddress& row_addr, int depth) {
  if (depth < 1 || depth > static_cast<int>(row_addr.rows.size()) + 1) {
    throw std::invalid_argument("point_of_row_address: depth out of range");
  }
  BoundedReal y = BoundedReal::exact(Rational(0), cons.params().precision_bits);
  for (int g = 2; g <= depth; ++g) {
    const int row = row_addr.rows[static_cast<std::size_t>(g - 2)];
    const GenerationRule rule = cons.params().rule_at(g);
    if (row < 1 || row > rule.s) {
      throw std::out_of_range("point_of_row_address: row index out of range");
    }
    y = y + cons.row_y_offset(g, row);
  }
  return YInterval{y, y + cons.metrics(depth).a, depth};
}

namespace {

Membership membership_A(const Construction& cons, const Rational& x, int depth) {
  if (x < Rational(0) || x > Rational(1)) return Membership::No;
  Rational x0(0);
  int gen = 1;
  while (true) {
    const GenerationMetrics& met = cons.metrics(gen);
    if (x == x0 || x == x0 + met.c) return Membership::Unresolved;  // persistent corner, in the set
    if (gen >= depth) return Membership::Unresolved;
    const int n = gen + 1;
    const GenerationRule rule = cons.params().rule_at(n);
    const GenerationMetrics& next = cons.metrics(n);
    const Rational pitch = next.c + next.d;
    const int last_slot = rule.r * rule.s - 1;
    mpz_class slot_z = ((x - x0) / pitch).floor();
    long slot = slot_z.fits_slong_p() ? slot_z.get_si() : last_slot;
    if (slot > last_slot) slot = last_slot;
    if (slot < 0) slot = 0;
    const Rational within = x - x0 - Rational(slot) * pitch;
    if (within > next.c) return Membership::No;  // interior of a gap
    x0 += Rational(slot) * pitch;
    gen = n;
  }
}

Membership membership_D(const Construction& cons, const Rational& y, int depth) {
  if (y < Rational(0) || y > Rational(1)) return Membership::No;
  // 0 and 1 are members (bottom and top corner limits); the descent below
  // keeps them unresolved, which is the sound answer for plain value queries.
  if (y == Rational(0) || y == Rational(1)) return Membership::Unresolved;
  BoundedReal y_lo = BoundedReal::exact(Rational(0), cons.params().precision_bits);
  for (int n = 2; n <= depth; ++n) {
    const GenerationRule rule = cons.params().rule_at(n);
    const BoundedReal& a = cons.metrics(n).a;
    int candidate = 0;
    int candidates = 0;
    for (int m = 1; m <= rule.s; ++m) {
      const BoundedReal lo = y_lo + cons.row_y_offset(n, m);
      const BoundedReal hi = lo + a;
      const bool certainly_below = y < lo.lower();
      const bool certainly_above = y > hi.upper();
      if (!certainly_below && !certainly_above) {
        candidate = m;
        ++candidates;
      }
    }
    if (candidates == 0) return Membership::No;
    if (candidates > 1) return Membership::Unresolved;
    y_lo = y_lo + cons.row_y_offset(n, candidate);
  }
  return Membership::Unresolved;
}

}  // namespace

Membership membership(const Construction& cons, const Rational& value, CoverTarget target,
                      int depth) {
  if (depth < 1) throw std::invalid_argument("membership: depth must be >= 1");
  switch (target) {
    case CoverTarget::A:
      return membership_A(cons, value, depth);
    case CoverTarget::D:
      return membership_D(cons, value, depth);
    default:
      throw std::invalid_argument("membership: target must be A or D");
  }
}

long long box_count(const CoverSet& cover, const Rational& scale) {
  if (!(scale > Rational(0))) throw std::invalid_argument("box_count: scale must be positive");
  mpz_class total(0);
  bool have_covered = false;
  Rational covered(0);  // union of placed boxes extends to [first, covered)
  for (const CoverInterval& iv : cover.intervals) {
    Rational start = iv.lo;
    if (have_covered && start < covered) {
      if (!(iv.hi > covered)) continue;
      start = covered;
    }
    const Rational len = iv.hi - start;
    mpz_class boxes = len.sign() <= 0 ? mpz_class(1) : (len / scale).ceil();
    total += boxes;
    covered = start + Rational(boxes, mpz_class(1)) * scale;
    have_covered = true;
  }
  if (!total.fits_slong_p()) throw std::overflow_error("box_count: count exceeds long long");
  return total.get_si();
}

namespace {

// ln of the count multiplier and ln of the length ratio for the step n -> n+1.
struct SlopeTerms {
  BoundedReal ln_count_ratio;
  BoundedReal ln_len_ratio;
};

SlopeTerms slope_terms(const Construction& cons, CoverTarget target, int n, int work_bits) {
  const GenerationRule rule = cons.params().rule_at(n + 1);
  switch (target) {
    case CoverTarget::A: {
      const Rational ratio = cons.metrics(n).c / cons.metrics(n + 1).c;
      return {ln(Rational(static_cast<long>(rule.r) * rule.s), work_bits), ln(ratio, work_bits)};
    }
    case CoverTarget::D: {
      const BoundedReal ratio = (cons.metrics(n).a / cons.metrics(n + 1).a).rounded(work_bits);
      return {ln(Rational(rule.s), work_bits), ln(ratio)};
    }
    case CoverTarget::LevelSet:
    case CoverTarget::LevelSetTight: {
      // For constant schedules the lambda factors cancel in the ratio.
      Rational ratio = cons.metrics(n).c / cons.metrics(n + 1).c;
      if (cons.params().scheduled()) {
        // raw cover lengths; lambda has no per-generation closed form here
      } else {
        ratio = (lambda_ratio(cons, n + 1) * cons.metrics(n).c) /
                (lambda_ratio(cons, n + 2) * cons.metrics(n + 1).c);
      }
      return {ln(Rational(rule.r), work_bits), ln(ratio, work_bits)};
    }
  }
  throw std::logic_error("slope_terms: unreachable");
}

}  // namespace

std::vector<BoundedReal> dimension_slopes(const Construction& cons, CoverTarget target,
                                          int n_lo, int n_hi) {
  if (n_lo < 2 || n_lo >= n_hi) {
    throw std::invalid_argument("dimension_slopes: need 2 <= n_lo < n_hi");
  }
  const int work = cons.params().precision_bits + 32;
  std::vector<BoundedReal> slopes;
  slopes.reserve(static_cast<std::size_t>(n_hi - n_lo));
  for (int n = n_lo; n < n_hi; ++n) {
    const SlopeTerms t = slope_terms(cons, target, n, work);
    slopes.push_back((t.ln_count_ratio / t.ln_len_ratio).rounded(cons.params().precision_bits));
  }
  return slopes;
}

BoundedReal estimate_dimension(const Construction& cons, CoverTarget target, int n_lo, int n_hi) {
  const std::vector<BoundedReal> slopes = dimension_slopes(cons, target, n_lo, n_hi);
  BoundedReal sum = BoundedReal::exact(Rational(0), cons.params().precision_bits);
  for (const BoundedReal& s : slopes) sum = sum + s;
  return sum / Rational(static_cast<long>(slopes.size()));
}

BoundedReal estimate_dimension_lsq(const Construction& cons, CoverTarget target, int n_lo,
                                   int n_hi) {
  if (n_lo < 2 || n_lo >= n_hi) {
    throw std::invalid_argument("estimate_dimension_lsq: need 2 <= n_lo < n_hi");
  }
  const int work = cons.params().precision_bits + 32;
  const int count = n_hi - n_lo + 1;

  // x_n = ln(1/len_n), y_n = ln(N_n), accumulated from the step terms.
  std::vector<BoundedReal> xs, ys;
  BoundedReal x = BoundedReal::exact(Rational(0), work);
  BoundedReal y = BoundedReal::exact(Rational(0), work);
  for (int n = 2; n <= n_hi; ++n) {
    if (n >= n_lo) {
      xs.push_back(x);
      ys.push_back(y);
    }
    if (n < n_hi) {
      const SlopeTerms t = slope_terms(cons, target, n, work);
      x = x + t.ln_len_ratio;
      y = y + t.ln_count_ratio;
    }
  }

  const Rational inv_n(1, count);
  BoundedReal xbar = BoundedReal::exact(Rational(0), work);
  BoundedReal ybar = BoundedReal::exact(Rational(0), work);
  for (int i = 0; i < count; ++i) {
    xbar = xbar + xs[static_cast<std::size_t>(i)];
    ybar = ybar + ys[static_cast<std::size_t>(i)];
  }
  xbar = xbar * inv_n;
  ybar = ybar * inv_n;
  BoundedReal sxy = BoundedReal::exact(Rational(0), work);
  BoundedReal sxx = BoundedReal::exact(Rational(0), work);
  for (int i = 0; i < count; ++i) {
    const BoundedReal dx = xs[static_cast<std::size_t>(i)] - xbar;
    const BoundedReal dy = ys[static_cast<std::size_t>(i)] - ybar;
    sxy = sxy + dx * dy;
    sxx = sxx + dx * dx;
  }
  return (sxy / sxx).rounded(cons.params().precision_bits);
}

DimensionReport closed_form_dimensions(const Construction& cons, int est_lo, int est_hi) {
  const ConstructionParams& p = cons.params();
  if (p.scheduled()) {
    throw std::domain_error("closed_form_dimensions: only defined for constant schedules");
  }
  const int work = p.precision_bits + 32;
  const Rational one_minus_eps = Rational(1) - p.eps;
  const BoundedReal ln_r = ln(Rational(p.r), work);
  const BoundedReal ln_s = ln(Rational(p.s), work);
  const BoundedReal ln_r_stretch = ln(Rational(p.r) / one_minus_eps, work);
  const BoundedReal ln_rs_stretch = ln(Rational(static_cast<long>(p.r) * p.s) / one_minus_eps, work);

  DimensionReport report;
  report.alpha = (ln_r / (ln_s + ln_r_stretch)).rounded(p.precision_bits);
  report.beta = (ln_s / ((Rational(p.k) + p.eps) * ln_rs_stretch)).rounded(p.precision_bits);
  report.lambda = Rational(p.r - 1, static_cast<long>(p.r) * p.s - 1);
  report.dim_A = (ln(Rational(static_cast<long>(p.r) * p.s), work) / ln_rs_stretch)
                     .rounded(p.precision_bits);
  report.dim_A_note =
      "derived from the same cover-counting pattern as beta; reported for reference";
  report.boxcount_alpha = estimate_dimension(cons, CoverTarget::LevelSet, est_lo, est_hi);
  report.boxcount_beta = estimate_dimension(cons, CoverTarget::D, est_lo, est_hi);
  report.upper_bound_margin =
      ((Rational(1) - report.alpha) / Rational(p.k) - report.beta).rounded(p.precision_bits);
  report.upper_bound_holds = report.upper_bound_margin.certainly_positive();
  return report;
}

}  // namespace cantorflat
