// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/verify.hpp"

#include "cantorflat/covers.hpp"
#include "cantorflat/evaluator.hpp"

namespace cantorflat {

namespace {

RectAddress canonical_parent(int generation) {
  RectAddress addr;
  for (int g = 2; g <= generation; ++g) addr.path.emplace_back(1, 1);
  return addr;
}

}  // namespace

ValidationReport verify_suite(const Construction& cons, const VerifyOptions& options) {
  const int depth = std::max(options.depth, 2);
  ValidationReport report = cons.validate_structure(depth);
  auto add = [&report](std::string name, int gen, bool pass, std::string detail) {
    report.checks.push_back(ValidationCheck{std::move(name), gen, pass, std::move(detail)});
  };

  if (options.inject_negative_b) {
    const BoundedReal injected = -cons.metrics(2).b;
    const bool ok = injected.certainly_positive();
    add("row-gap-positive(injected)", 2, ok, "fault injection: b_2 sign flipped");
  }

  // Link curves hit both corner endpoints and stay inside the corner span.
  for (int n = 2; n <= depth; ++n) {
    const RectAddress parent = canonical_parent(n - 1);
    bool endpoints_ok = true;
    bool monotone_ok = true;
    for (const GapSegment& gap : cons.gaps_of(parent)) {
      const Rational tol(1, 1000000);
      const EvalResult at_start = evaluate(cons, gap.x_start, tol);
      const EvalResult at_end = evaluate(cons, gap.x_end, tol);
      endpoints_ok = endpoints_ok && at_start.value.overlaps(gap.y_start) &&
                     at_end.value.overlaps(gap.y_end);
      // Interior samples are strictly between the endpoint values.
      const Rational x_mid = (gap.x_start + gap.x_end) / Rational(2);
      const EvalResult at_mid = evaluate(cons, x_mid, tol);
      const BoundedReal lo = gap.kind == GapKind::WithinRow ? gap.y_end : gap.y_start;
      const BoundedReal hi = gap.kind == GapKind::WithinRow ? gap.y_start : gap.y_end;
      monotone_ok = monotone_ok && lo.certainly_less(at_mid.value) &&
                    at_mid.value.certainly_less(hi);
    }
    add("gap-endpoint-interpolation", n, endpoints_ok,
        endpoints_ok ? "" : "link curve misses a corner");
    add("gap-interior-between-corners", n, monotone_ok,
        monotone_ok ? "" : "link curve leaves the corner span");
  }

  // Sampled values on [0,1] stay inside [0,1].
  {
    bool ok = true;
    const Rational tol(1, 1L << 20);
    for (int i = 0; i <= 32 && ok; ++i) {
      const EvalResult res = evaluate(cons, Rational(i, 32), tol);
      ok = !(res.value.upper() < Rational(0)) && !(res.value.lower() > Rational(1));
    }
    add("range-containment", depth, ok, ok ? "" : "a sampled value escapes [0,1]");
  }

  // Monotone outside pieces.
  {
    bool ok = true;
    const Rational tol(1, 1000);
    Rational prev(-10);
    bool first = true;
    for (int i = 0; i <= 16; ++i) {
      const Rational x = Rational(-2) + Rational(i, 8);
      const EvalResult res = evaluate(cons, x, tol);
      if (!first && !(res.value.midpoint() > prev)) ok = false;
      prev = res.value.midpoint();
      first = false;
      if (x == Rational(0)) break;
    }
    first = true;
    for (int i = 0; i <= 8; ++i) {
      const Rational x = Rational(1) + Rational(i, 8);
      const EvalResult res = evaluate(cons, x, tol);
      if (!first && !(res.value.midpoint() > prev)) ok = false;
      prev = res.value.midpoint();
      first = false;
    }
    add("outside-strictly-increasing", 0, ok, ok ? "" : "an outside piece is not increasing");
  }

  // Lambda identity: (r-1)(c_n + d_n) + lambda*c_n = lambda*c_{n-1}, exact.
  if (!cons.params().scheduled()) {
    const Rational lambda = lambda_ratio(cons, 2);
    bool ok = true;
    for (int n = 2; n <= depth && ok; ++n) {
      const GenerationMetrics& met = cons.metrics(n);
      const GenerationMetrics& prev = cons.metrics(n - 1);
      const Rational lhs =
          Rational(cons.params().r - 1) * (met.c + met.d) + lambda * met.c;
      ok = lhs == lambda * prev.c;
    }
    add("lambda-identity", depth, ok, ok ? "" : "the lambda fixed-point identity fails");
  }

  // Cover nesting: each generation-(n+1) interval lies inside exactly one
  // generation-n interval (sampled at small n).
  {
    bool ok = true;
    const int n_max = std::min(depth, 3);
    for (int n = 1; n < n_max && ok; ++n) {
      const CoverSet outer = cover_A(cons, n);
      const CoverSet inner = cover_A(cons, n + 1);
      for (const CoverInterval& child : inner.intervals) {
        int hits = 0;
        for (const CoverInterval& par : outer.intervals) {
          if (par.lo <= child.lo && child.hi <= par.hi) ++hits;
        }
        if (hits != 1) {
          ok = false;
          break;
        }
      }
    }
    add("cover-nesting", n_max, ok, ok ? "" : "a child cover interval escapes its parent");
  }

  // Closed forms match the consecutive-scale slopes (constant schedule only).
  if (!cons.params().scheduled()) {
    const int hi = std::max(4, std::min(depth, 8));
    const DimensionReport dims = closed_form_dimensions(cons, 3, hi);
    const Rational tol(1, 10'000'000'000LL);
    const bool alpha_ok =
        (dims.alpha - dims.boxcount_alpha).abs().upper() < tol;
    const bool beta_ok = (dims.beta - dims.boxcount_beta).abs().upper() < tol;
    add("alpha-closed-form-vs-slopes", hi, alpha_ok,
        alpha_ok ? "" : "level-set slope estimate deviates from the closed form");
    add("beta-closed-form-vs-slopes", hi, beta_ok,
        beta_ok ? "" : "image-set slope estimate deviates from the closed form");
    add("beta-upper-bound", 0, dims.upper_bound_holds,
        dims.upper_bound_holds ? "" : "beta <= (1-alpha)/k fails");
  } else {
    add("closed-forms-skipped", 0, true, "scheduled parameters: structural checks only");
  }

  return report;
}

}  // namespace cantorflat
