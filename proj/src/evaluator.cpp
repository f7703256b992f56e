// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/evaluator.hpp"

#include <stdexcept>

namespace cantorflat {

namespace {

EvalResult cantor_result(BoundedReal value, int depth, RectAddress address) {
  EvalResult out;
  out.value = std::move(value);
  out.depth_used = depth;
  out.cls = PointClass::Cantor;
  out.address = std::move(address);
  return out;
}

}  // namespace

EvalResult evaluate(const Construction& cons, const Rational& x, const Rational& tol) {
  if (x < Rational(-2) || x > Rational(2)) throw std::domain_error("evaluate: x outside [-2,2]");
  if (!(tol > Rational(0))) throw std::invalid_argument("evaluate: tol must be positive");
  const int bits = cons.params().precision_bits;
  const long kp1 = cons.params().k + 1;

  if (x < Rational(0)) {
    EvalResult out;
    out.value = BoundedReal::exact(-((-x).pow(kp1)), bits);
    out.cls = PointClass::OutsideLeft;
    return out;
  }
  if (x > Rational(1)) {
    EvalResult out;
    out.value = BoundedReal::exact(Rational(1) + (x - Rational(1)).pow(kp1), bits);
    out.cls = PointClass::OutsideRight;
    return out;
  }

  Rational x0(0);
  BoundedReal y0 = BoundedReal::exact(Rational(0), bits);
  RectAddress address;
  int gen = 1;
  while (true) {
    const GenerationMetrics& met = cons.metrics(gen);
    // Exact corner hits: the bottom-left and top-right corners of every
    // rectangle belong to the critical set with known value.
    if (x == x0) return cantor_result(y0, gen, std::move(address));
    if (x == x0 + met.c) return cantor_result(y0 + met.a, gen, std::move(address));
    if (met.a.upper() < tol) {
      BoundedReal mid = y0 + met.a / Rational(2);
      return cantor_result(mid.inflated(met.a.upper() / Rational(2)), gen, std::move(address));
    }

    const int n = gen + 1;
    const GenerationRule rule = cons.params().rule_at(n);
    const GenerationMetrics& next = cons.metrics(n);
    const Rational pitch = next.c + next.d;
    const int last_slot = rule.r * rule.s - 1;

    const Rational off = x - x0;
    mpz_class slot_z = (off / pitch).floor();
    long slot = slot_z.fits_slong_p() ? slot_z.get_si() : last_slot;
    if (slot > last_slot) slot = last_slot;
    if (slot < 0) slot = 0;
    const Rational within = off - Rational(slot) * pitch;

    if (within > next.c) {
      // In the open gap between child `slot` and child `slot + 1`: the link
      // curve through both corners, rescaled from the kernel. Exact formula.
      const int m_left = static_cast<int>(slot) / rule.r + 1;
      const int m_right = static_cast<int>(slot + 1) / rule.r + 1;
      GapSegment g;
      g.generation = n;
      g.x_start = x0 + Rational(slot) * pitch + next.c;
      g.x_end = x0 + Rational(slot + 1) * pitch;
      g.y_start = y0 + cons.row_y_offset(n, m_left) + next.a;
      g.y_end = y0 + cons.row_y_offset(n, m_right);
      g.kind = (m_left == m_right) ? GapKind::WithinRow : GapKind::RowTransition;

      const Rational t = (x - g.x_start) / next.d;
      const Rational phi_t = phi_eval(cons.kernel(), t);
      EvalResult out;
      out.value = g.y_end + (g.y_start - g.y_end) * phi_t;
      out.depth_used = n;
      out.cls = PointClass::Gap;
      out.gap = std::move(g);
      return out;
    }

    const int m = static_cast<int>(slot) / rule.r + 1;
    const int p = static_cast<int>(slot) % rule.r + 1;
    address.path.emplace_back(m, p);
    x0 += Rational(slot) * pitch;
    y0 = y0 + cons.row_y_offset(n, m);
    gen = n;
  }
}

std::vector<std::pair<Rational, EvalResult>> evaluate_grid(
    const Construction& cons, const Rational& x_lo, const Rational& x_hi, int count,
    const Rational& tol) {
  if (count < 2) throw std::invalid_argument("evaluate_grid: count must be >= 2");
  if (!(x_lo < x_hi)) throw std::invalid_argument("evaluate_grid: x_lo must be < x_hi");
  const Rational step = (x_hi - x_lo) / Rational(count - 1);
  std::vector<std::pair<Rational, EvalResult>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Rational x = (i == count - 1) ? x_hi : x_lo + Rational(i) * step;
    out.emplace_back(x, evaluate(cons, x, tol));
  }
  return out;
}

BoundedReal kth_diff(const Construction& cons, const Rational& x, const Rational& h, int order) {
  if (order < 1 || order > cons.params().k) {
    throw std::invalid_argument("kth_diff: order must be in [1, k]");
  }
  if (!(h > Rational(0))) throw std::invalid_argument("kth_diff: h must be positive");
  const Rational x_hi = x + Rational(order) * h;
  if (x < Rational(-2) || x_hi > Rational(2)) {
    throw std::domain_error("kth_diff: stencil leaves [-2,2]");
  }
  const Rational tol = h.pow(order + 2);
  BoundedReal sum = BoundedReal::exact(Rational(0), cons.params().precision_bits);
  for (int i = 0; i <= order; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(order),
                 static_cast<unsigned long>(i));
    Rational w(binom, mpz_class(1));
    if ((order - i) % 2 == 1) w = -w;
    const EvalResult fx = evaluate(cons, x + Rational(i) * h, tol);
    sum = sum + fx.value * w;
  }
  return sum / h.pow(order);
}

FlatnessReport flatness_probe(const Construction& cons, const RectAddress& address,
                              const std::vector<Rational>& h_schedule) {
  const Rect rect = cons.rect_of(address);
  const int gen = address.generation();

  FlatnessReport report;
  report.address = address;
  report.x = rect.x0;
  report.gap_scale = cons.metrics(gen + 1).d;

  const int k = cons.params().k;
  report.per_order.resize(static_cast<std::size_t>(k));
  report.decays.assign(static_cast<std::size_t>(k), true);
  for (int order = 1; order <= k; ++order) {
    auto& entries = report.per_order[static_cast<std::size_t>(order - 1)];
    for (const Rational& h : h_schedule) {
      entries.push_back({h, kth_diff(cons, rect.x0, h, order)});
    }
    bool decays = true;
    bool any_pair = false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (!(entries[i].h > entries[i + 1].h)) {
        throw std::invalid_argument("flatness_probe: h_schedule must be strictly decreasing");
      }
      if (entries[i].h >= report.gap_scale) continue;
      any_pair = true;
      const BoundedReal cur = entries[i].diff.abs();
      const BoundedReal nxt = entries[i + 1].diff.abs();
      if (nxt.upper() > cur.upper()) decays = false;
    }
    report.decays[static_cast<std::size_t>(order - 1)] = decays && any_pair;
  }
  return report;
}

}  // namespace cantorflat
