// Shared helpers for the test suites: deterministic random inputs and the
// independent reference implementations used as oracles.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cantorflat/bounded_real.hpp"
#include "cantorflat/evaluator.hpp"
#include "cantorflat/geometry.hpp"
#include "cantorflat/rational.hpp"

namespace testsupport {

using cantorflat::BoundedReal;
using cantorflat::Construction;
using cantorflat::GapKind;
using cantorflat::GapSegment;
using cantorflat::Rational;
using cantorflat::Rect;
using cantorflat::RectAddress;

inline Rational parse_decimal(const char* text) {
  return Rational::from_decimal_string(text);
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  /// Random rational in [0, 1] with denominator up to max_den.
  Rational rational01(long max_den = 1'000'000) {
    const long den = integer(2, max_den);
    const long num = integer(0, den);
    return Rational(num, den);
  }

  /// Random rational in (lo, hi).
  Rational rational_in(const Rational& lo, const Rational& hi, long max_den = 1'000'000) {
    const long den = integer(3, max_den);
    const long num = integer(1, den - 1);
    return lo + Rational(num, den) * (hi - lo);
  }
};

/// Independent kernel evaluation by direct term summation of the partial
/// integral (no expanded-coefficient polynomial):
///   1 - (sum_i C(k,i)(-1)^i x^(k+i+1)/(k+i+1)) / (same sum at x = 1).
inline Rational phi_reference(int k, const Rational& x) {
  auto partial = [k](const Rational& t) {
    Rational sum(0);
    for (int i = 0; i <= k; ++i) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                   static_cast<unsigned long>(i));
      Rational term = Rational(binom, mpz_class(k + i + 1)) * t.pow(k + i + 1);
      if (i % 2 == 1) term = -term;
      sum += term;
    }
    return sum;
  };
  return Rational(1) - partial(x) / partial(Rational(1));
}

/// Naive reference evaluator: materializes every rectangle and gap down to a
/// fixed depth and answers queries by linear search, with the link curve
/// evaluated through phi_reference. Deliberately brute-force and independent
/// of the lazy descent.
struct NaiveEvaluator {
  const Construction& cons;
  int depth;
  std::vector<GapSegment> gaps;            // all generations <= depth
  std::vector<std::pair<Rational, BoundedReal>> leaves;  // (x0, y0) of depth-gen rects

  NaiveEvaluator(const Construction& construction, int max_depth)
      : cons(construction), depth(max_depth) {
    std::vector<RectAddress> frontier{RectAddress{}};
    for (int gen = 1; gen < depth; ++gen) {
      std::vector<RectAddress> next;
      for (const RectAddress& parent : frontier) {
        for (const GapSegment& gap : cons.gaps_of(parent)) gaps.push_back(gap);
        const auto rule = cons.params().rule_at(gen + 1);
        for (int m = 1; m <= rule.s; ++m) {
          for (int p = 1; p <= rule.r; ++p) {
            RectAddress child = parent;
            child.path.emplace_back(m, p);
            next.push_back(std::move(child));
          }
        }
      }
      frontier = std::move(next);
    }
    for (const RectAddress& addr : frontier) {
      const Rect rect = cons.rect_of(addr);
      leaves.emplace_back(rect.x0, rect.y0);
    }
  }

  /// Enclosure of f(x) for x in [0,1].
  BoundedReal eval(const Rational& x) const {
    for (const GapSegment& gap : gaps) {
      if (gap.x_start < x && x < gap.x_end) {
        const Rational t = (x - gap.x_start) / (gap.x_end - gap.x_start);
        const Rational phi = phi_reference(cons.params().k, t);
        return gap.y_end + (gap.y_start - gap.y_end) * phi;
      }
    }
    const Rational width = cons.metrics(depth).c;
    const BoundedReal& height = cons.metrics(depth).a;
    for (const auto& [x0, y0] : leaves) {
      if (x0 <= x && x <= x0 + width) {
        return (y0 + height / Rational(2)).inflated(height.upper() / Rational(2));
      }
    }
    throw std::logic_error("naive evaluator: point not located");
  }
};

}  // namespace testsupport
