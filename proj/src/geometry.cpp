// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace cantorflat {

GenerationRule ConstructionParams::rule_at(int generation) const {
  if (generation < 2) throw std::invalid_argument("rule_at: generation must be >= 2");
  if (schedule.empty()) return GenerationRule{r, s, eps};
  const std::size_t idx = static_cast<std::size_t>(generation - 2);
  return idx < schedule.size() ? schedule[idx] : schedule.back();
}

namespace {

void validate_rule(int k, int r, int s, const Rational& eps) {
  if (k < 1) throw std::invalid_argument("params: k must be >= 1");
  if (r < 2) throw std::invalid_argument("params: r must be >= 2");
  if (s < 2) throw std::invalid_argument("params: s must be >= 2");
  const Rational limit = min(Rational(1, 2), Rational(1, static_cast<long>(r) * s - 1));
  if (!(eps > Rational(0) && eps < limit)) {
    throw std::invalid_argument(
        "params: eps must satisfy 0 < eps < min(1/2, 1/(r*s - 1)); got eps = " + eps.str() +
        " with r = " + std::to_string(r) + ", s = " + std::to_string(s));
  }
}

}  // namespace

void ConstructionParams::validate() const {
  validate_rule(k, r, s, eps);
  for (const GenerationRule& rule : schedule) validate_rule(k, rule.r, rule.s, rule.eps);
  if (precision_bits < 16) throw std::invalid_argument("params: precision_bits must be >= 16");
}

std::string RectAddress::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << ';';
    out << path[i].first << '.' << path[i].second;
  }
  return out.str();
}

RectAddress RectAddress::from_string(const std::string& text) {
  RectAddress addr;
  if (text.empty()) return addr;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto dot = item.find('.');
    if (dot == std::string::npos) {
      throw std::invalid_argument("address: expected 'm.p' entries, got '" + item + "'");
    }
    const int m = std::stoi(item.substr(0, dot));
    const int p = std::stoi(item.substr(dot + 1));
    addr.path.emplace_back(m, p);
  }
  return addr;
}

bool ValidationReport::all_pass() const {
  for (const ValidationCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Construction::Construction(ConstructionParams params)
    : params_((params.validate(), std::move(params))), kernel_(make_kernel(params_.k)) {
  GenerationMetrics root;
  root.n = 1;
  root.c = Rational(1);
  root.d = Rational(0);
  root.a = BoundedReal::exact(Rational(1), params_.precision_bits);
  root.b = BoundedReal::exact(Rational(0), params_.precision_bits);
  metrics_.push_back(std::move(root));
  row_offsets_.push_back({});
  ready_.store(1, std::memory_order_release);
}

void Construction::ensure(int n) const {
  if (n <= ready_.load(std::memory_order_acquire)) return;
  std::lock_guard<std::mutex> lock(mu_);
  for (int g = static_cast<int>(metrics_.size()) + 1; g <= n; ++g) {
    const GenerationMetrics& prev = metrics_[static_cast<std::size_t>(g - 2)];
    const GenerationRule rule = params_.rule_at(g);
    const long rs = static_cast<long>(rule.r) * rule.s;

    GenerationMetrics m;
    m.n = g;
    m.c = (Rational(1) - rule.eps) * prev.c / Rational(rs);
    m.d = rule.eps * prev.c / Rational(rs - 1);
    m.a = pow_rat(m.d, Rational(params_.k) + rule.eps, params_.precision_bits);
    m.b = (prev.a - Rational(rule.s) * m.a) / Rational(rule.s - 1);
    if (!m.b.certainly_positive()) {
      throw ConstructionError("metrics: b_" + std::to_string(g) +
                              " is not certainly positive; construction degenerates");
    }

    std::vector<BoundedReal> rows;
    rows.reserve(static_cast<std::size_t>(rule.s));
    BoundedReal step = m.a + m.b;
    BoundedReal acc = BoundedReal::exact(Rational(0), params_.precision_bits);
    for (int row = 1; row <= rule.s; ++row) {
      rows.push_back(acc);
      if (row < rule.s) acc = acc + step;
    }
    metrics_.push_back(std::move(m));
    row_offsets_.push_back(std::move(rows));
    ready_.store(g, std::memory_order_release);
  }
}

const GenerationMetrics& Construction::metrics(int n) const {
  if (n < 1) throw std::invalid_argument("metrics: generation must be >= 1");
  ensure(n);
  return metrics_[static_cast<std::size_t>(n - 1)];
}

int Construction::children_per_parent(int n) const {
  const GenerationRule rule = params_.rule_at(n);
  return rule.r * rule.s;
}

Rational Construction::child_x_offset(int n, int slot) const {
  const GenerationMetrics& m = metrics(n);
  return Rational(slot) * (m.c + m.d);
}

const BoundedReal& Construction::row_y_offset(int n, int m) const {
  const GenerationRule rule = params_.rule_at(n);
  if (m < 1 || m > rule.s) throw std::out_of_range("row_y_offset: row out of range");
  ensure(n);
  return row_offsets_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
}

Rect Construction::rect_of(const RectAddress& address) const {
  Rational x0(0);
  BoundedReal y0 = BoundedReal::exact(Rational(0), params_.precision_bits);
  int gen = 1;
  for (const auto& [m, p] : address.path) {
    const int n = gen + 1;
    const GenerationRule rule = params_.rule_at(n);
    if (m < 1 || m > rule.s || p < 1 || p > rule.r) {
      throw std::out_of_range("address: index (" + std::to_string(m) + "," + std::to_string(p) +
                              ") out of range at generation " + std::to_string(n));
    }
    const int slot = (m - 1) * rule.r + (p - 1);
    x0 += child_x_offset(n, slot);
    y0 = y0 + row_y_offset(n, m);
    gen = n;
  }
  const GenerationMetrics& met = metrics(gen);
  return Rect{std::move(x0), met.c, std::move(y0), met.a};
}

std::vector<GapSegment> Construction::gaps_of(const RectAddress& parent) const {
  const Rect prect = rect_of(parent);
  const int n = parent.generation() + 1;
  const GenerationRule rule = params_.rule_at(n);
  const GenerationMetrics& met = metrics(n);
  const int count = rule.r * rule.s - 1;

  std::vector<GapSegment> gaps;
  gaps.reserve(static_cast<std::size_t>(count));
  for (int slot = 0; slot < count; ++slot) {
    const int m_left = slot / rule.r + 1;
    const int m_right = (slot + 1) / rule.r + 1;
    GapSegment g;
    g.generation = n;
    g.x_start = prect.x0 + child_x_offset(n, slot) + met.c;
    g.x_end = prect.x0 + child_x_offset(n, slot + 1);
    g.y_start = prect.y0 + row_y_offset(n, m_left) + met.a;
    g.y_end = prect.y0 + row_y_offset(n, m_right);
    g.kind = (m_left == m_right) ? GapKind::WithinRow : GapKind::RowTransition;
    gaps.push_back(std::move(g));
  }
  return gaps;
}

LocateResult Construction::locate(const Rational& x, int max_depth) const {
  if (x < Rational(0) || x > Rational(1)) throw std::domain_error("locate: x outside [0,1]");
  if (max_depth < 1) throw std::invalid_argument("locate: max_depth must be >= 1");

  LocateResult result;
  Rational x0(0);
  BoundedReal y0 = BoundedReal::exact(Rational(0), params_.precision_bits);
  for (int gen = 1; gen < max_depth; ++gen) {
    const int n = gen + 1;
    const GenerationRule rule = params_.rule_at(n);
    const GenerationMetrics& met = metrics(n);
    const Rational pitch = met.c + met.d;
    const int last_slot = rule.r * rule.s - 1;

    Rational off = x - x0;
    mpz_class slot_z = (off / pitch).floor();
    long slot = slot_z.fits_slong_p() ? slot_z.get_si() : last_slot;
    if (slot > last_slot) slot = last_slot;
    if (slot < 0) slot = 0;
    const Rational within = off - Rational(slot) * pitch;
    if (within > met.c) {
      const int m_left = static_cast<int>(slot) / rule.r + 1;
      const int m_right = static_cast<int>(slot + 1) / rule.r + 1;
      GapSegment g;
      g.generation = n;
      g.x_start = x0 + Rational(slot) * pitch + met.c;
      g.x_end = x0 + Rational(slot + 1) * pitch;
      g.y_start = y0 + row_y_offset(n, m_left) + met.a;
      g.y_end = y0 + row_y_offset(n, m_right);
      g.kind = (m_left == m_right) ? GapKind::WithinRow : GapKind::RowTransition;
      result.kind = LocateResult::Kind::Gap;
      result.gap = std::move(g);
      result.gap_index = static_cast<int>(slot);
      return result;
    }
    const int m = static_cast<int>(slot) / rule.r + 1;
    const int p = static_cast<int>(slot) % rule.r + 1;
    result.address.path.emplace_back(m, p);
    x0 += Rational(slot) * pitch;
    y0 = y0 + row_y_offset(n, m);
  }
  result.kind = LocateResult::Kind::Unresolved;
  return result;
}

ValidationReport Construction::validate_structure(int depth) const {
  if (depth < 2) throw std::invalid_argument("validate: depth must be >= 2");
  ValidationReport report;
  auto add = [&report](std::string name, int gen, bool pass, std::string detail) {
    report.checks.push_back(ValidationCheck{std::move(name), gen, pass, std::move(detail)});
  };

  {
    const Rect root = rect_of(RectAddress{});
    const bool ok = root.x0 == Rational(0) && root.width == Rational(1) &&
                    root.y0.exact_value() && root.y0.midpoint() == Rational(0) &&
                    root.height.exact_value() && root.height.midpoint() == Rational(1);
    add("root-unit-square", 1, ok, ok ? "" : "root rectangle is not [0,1]x[0,1]");
  }

  for (int n = 2; n <= depth; ++n) {
    const GenerationRule rule = params_.rule_at(n);
    const GenerationMetrics& met = metrics(n);
    const GenerationMetrics& prev = metrics(n - 1);
    const long rs = static_cast<long>(rule.r) * rule.s;

    {
      const Rational lhs = Rational(rs) * met.c + Rational(rs - 1) * met.d;
      const bool ok = lhs == prev.c;
      add("width-telescoping", n, ok,
          ok ? "" : "rs*c_n + (rs-1)*d_n = " + lhs.str() + " != c_{n-1} = " + prev.c.str());
    }
    {
      const BoundedReal lhs = Rational(rule.s) * met.a + Rational(rule.s - 1) * met.b;
      const bool ok = lhs.overlaps(prev.a);
      add("height-telescoping", n, ok,
          ok ? "" : "s*a_n + (s-1)*b_n does not enclose a_{n-1}");
    }
    {
      const bool ok = met.b.certainly_positive();
      add("row-gap-positive", n, ok, ok ? "" : "b_n not certainly positive");
    }
    {
      // Child x-intervals are uniformly spaced by d_n; offsets depend only on n.
      bool ok = met.d > Rational(0);
      for (int slot = 0; ok && slot + 1 < rs; ++slot) {
        const Rational gap = child_x_offset(n, slot + 1) - (child_x_offset(n, slot) + met.c);
        ok = gap == met.d;
      }
      const Rational span = child_x_offset(n, static_cast<int>(rs) - 1) + met.c;
      ok = ok && span == prev.c;
      add("children-disjoint-x", n, ok, ok ? "" : "child x-intervals overlap or misalign");
    }
    {
      // Rows share one y-interval; consecutive rows are separated by b_n > 0.
      bool ok = true;
      for (int m = 1; ok && m < rule.s; ++m) {
        const BoundedReal lo_next = row_y_offset(n, m + 1);
        const BoundedReal hi_this = row_y_offset(n, m) + met.a;
        ok = hi_this.certainly_less(lo_next);
      }
      add("rows-disjoint-y", n, ok, ok ? "" : "row y-intervals are not certainly disjoint");
    }
    {
      // All rectangles of one row realize the same y-interval.
      RectAddress parent;
      for (int g = 2; g < n; ++g) parent.path.emplace_back(1, 1);
      bool ok = true;
      for (int m = 1; ok && m <= rule.s; ++m) {
        RectAddress first = parent;
        first.path.emplace_back(m, 1);
        RectAddress last = parent;
        last.path.emplace_back(m, rule.r);
        const Rect rf = rect_of(first);
        const Rect rl = rect_of(last);
        ok = rf.y0.midpoint() == rl.y0.midpoint() && rf.y0.radius() == rl.y0.radius();
      }
      add("rows-identical-y", n, ok, ok ? "" : "rectangles of one row differ in y-interval");
    }
  }
  return report;
}

}  // namespace cantorflat
