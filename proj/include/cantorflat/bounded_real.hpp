// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "cantorflat/rational.hpp"

namespace cantorflat {

/// A real number enclosed by [midpoint - radius, midpoint + radius].
///
/// The midpoint is a rational (after any arithmetic, a dyadic rational with
/// at most precision_bits significant bits; exactly-known inputs keep their
/// exact value and radius zero). The radius is a small nonnegative dyadic
/// rational, so every operation stays in exact rational arithmetic and the
/// enclosure is rigorous: rounding produced by re-centering is folded into
/// the radius exactly, never dropped.
class BoundedReal {
 public:
  static constexpr int kDefaultPrecision = 128;

  BoundedReal() : mid_(0), rad_(0), prec_(kDefaultPrecision) {}

  /// Exactly-known value: radius 0.
  static BoundedReal exact(Rational value, int precision_bits = kDefaultPrecision);

  /// Rigorous enclosure of [lo, hi], re-centered onto a precision_bits dyadic.
  static BoundedReal with_bounds(const Rational& lo, const Rational& hi, int precision_bits);

  const Rational& midpoint() const { return mid_; }
  const Rational& radius() const { return rad_; }
  int precision_bits() const { return prec_; }
  bool exact_value() const { return rad_.is_zero(); }

  Rational lower() const { return mid_ - rad_; }
  Rational upper() const { return mid_ + rad_; }

  /// Same enclosure with the radius grown by `extra` (extra >= 0).
  BoundedReal inflated(const Rational& extra) const;

  /// Re-enclose at a different precision (never loses containment).
  BoundedReal rounded(int precision_bits) const;

  friend BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a);

  friend BoundedReal operator+(const BoundedReal& a, const Rational& b) { return a + exact(b, a.prec_); }
  friend BoundedReal operator+(const Rational& a, const BoundedReal& b) { return exact(a, b.prec_) + b; }
  friend BoundedReal operator-(const BoundedReal& a, const Rational& b) { return a - exact(b, a.prec_); }
  friend BoundedReal operator-(const Rational& a, const BoundedReal& b) { return exact(a, b.prec_) - b; }
  friend BoundedReal operator*(const BoundedReal& a, const Rational& b) { return a * exact(b, a.prec_); }
  friend BoundedReal operator*(const Rational& a, const BoundedReal& b) { return exact(a, b.prec_) * b; }
  friend BoundedReal operator/(const BoundedReal& a, const Rational& b) { return a / exact(b, a.prec_); }
  friend BoundedReal operator/(const Rational& a, const BoundedReal& b) { return exact(a, b.prec_) / b; }

  BoundedReal abs() const;

  bool certainly_less(const BoundedReal& o) const { return upper() < o.lower(); }
  bool certainly_greater(const BoundedReal& o) const { return lower() > o.upper(); }
  bool certainly_positive() const { return lower() > Rational(0); }
  bool certainly_negative() const { return upper() < Rational(0); }
  bool contains(const Rational& q) const { return lower() <= q && q <= upper(); }

  /// True if the two enclosures overlap (the values may be equal).
  bool overlaps(const BoundedReal& o) const { return !(certainly_less(o) || certainly_greater(o)); }

  /// Decimal rendering of the midpoint with at least ceil(0.302 * precision_bits)
  /// significant digits (scientific form, deterministic).
  std::string value_string() const;
  std::string error_string() const { return rad_.str(); }

  double to_double() const { return mid_.to_double(); }

 private:
  BoundedReal(Rational mid, Rational rad, int prec)
      : mid_(std::move(mid)), rad_(std::move(rad)), prec_(prec) {}

  Rational mid_;
  Rational rad_;
  int prec_;
};

/// Rigorous enclosure of e^x.
BoundedReal exp(const BoundedReal& x);

/// Rigorous enclosure of ln(x); requires x certainly positive.
BoundedReal ln(const BoundedReal& x);
BoundedReal ln(const Rational& x, int precision_bits = BoundedReal::kDefaultPrecision);

/// base^exponent with a rigorous error bound. Exact (radius 0) for integer
/// exponents; otherwise evaluated as exp(exponent * ln(base)).
/// Requires base > 0 and precision_bits >= 16.
BoundedReal pow_rat(const Rational& base, const Rational& exponent, int precision_bits = BoundedReal::kDefaultPrecision);

/// log base `denom_base` of `numer`, as a rigorous enclosure.
/// Requires numer > 0 and denom_base > 1.
BoundedReal log_ratio(const Rational& numer, const Rational& denom_base, int precision_bits = BoundedReal::kDefaultPrecision);

/// Smallest dyadic with at most `sig_bits` significant bits that is >= q.
/// (q must be >= 0.) Used to keep interval radii small.
Rational dyadic_round_up(const Rational& q, int sig_bits);

/// q rounded to the nearest dyadic with at most `sig_bits` significant bits.
Rational dyadic_round_nearest(const Rational& q, int sig_bits);

}  // namespace cantorflat
