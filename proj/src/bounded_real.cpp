// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/bounded_real.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <vector>

namespace cantorflat {

namespace {

constexpr int kRadiusBits = 64;   // significant bits kept in radii
constexpr int kGuardBits = 32;    // extra working precision for exp/ln

// RAII wrapper for a temporary mpfr value.
class Mpfr {
 public:
  explicit Mpfr(int precision_bits) { mpfr_init2(f_, precision_bits); }
  ~Mpfr() { mpfr_clear(f_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return f_; }
  mpfr_srcptr get() const { return f_; }

 private:
  mpfr_t f_;
};

void set_from_rational(Mpfr& f, const Rational& q, mpfr_rnd_t rnd) {
  mpfr_set_q(f.get(), q.raw().get_mpq_t(), rnd);
}

// Exact rational value of an mpfr number (binary floats are rational).
Rational rational_from_mpfr(const Mpfr& f) {
  if (mpfr_zero_p(f.get())) return Rational(0);
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), f.get());
  if (e >= 0) {
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(std::move(shifted), mpz_class(1));
  }
  mpz_class den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(std::move(mant), std::move(den));
}

// Dyadic m * 2^-t from mantissa and scale.
Rational dyadic(mpz_class m, long t) {
  if (t >= 0) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
    return Rational(std::move(m), std::move(den));
  }
  mpz_class num;
  mpz_mul_2exp(num.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
  return Rational(std::move(num), mpz_class(1));
}

// Scale exponent so the mantissa ends up with about sig_bits bits.
long dyadic_shift(const Rational& q, int sig_bits) {
  const long nb = static_cast<long>(mpz_sizeinbase(q.numerator().get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(q.denominator().get_mpz_t(), 2));
  return sig_bits - (nb - db);
}

}  // namespace

Rational dyadic_round_up(const Rational& q, int sig_bits) {
  if (q.sign() < 0) throw std::invalid_argument("dyadic_round_up: negative input");
  if (q.is_zero()) return q;
  const long t = dyadic_shift(q, sig_bits);
  mpz_class num = q.numerator();
  mpz_class den = q.denominator();
  if (t >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
  }
  mpz_class m;
  mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dyadic(std::move(m), t);
}

Rational dyadic_round_nearest(const Rational& q, int sig_bits) {
  if (q.is_zero()) return q;
  const Rational a = q.abs();
  const long t = dyadic_shift(a, sig_bits);
  mpz_class num = a.numerator();
  mpz_class den = a.denominator();
  if (t >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
  }
  mpz_class m, r;
  mpz_fdiv_qr(m.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  r *= 2;
  if (r >= den) m += 1;  // round half away from zero
  Rational out = dyadic(std::move(m), t);
  return q.sign() < 0 ? -out : out;
}

BoundedReal BoundedReal::exact(Rational value, int precision_bits) {
  return BoundedReal(std::move(value), Rational(0), precision_bits);
}

BoundedReal BoundedReal::with_bounds(const Rational& lo, const Rational& hi, int precision_bits) {
  if (hi < lo) throw std::invalid_argument("bounded_real: hi < lo");
  if (lo == hi) return exact(lo, precision_bits);
  const Rational mid = dyadic_round_nearest((lo + hi) / Rational(2), precision_bits);
  const Rational rad = max(mid - lo, hi - mid);
  return BoundedReal(mid, dyadic_round_up(rad, kRadiusBits), precision_bits);
}

BoundedReal BoundedReal::inflated(const Rational& extra) const {
  if (extra.sign() < 0) throw std::invalid_argument("bounded_real: negative inflation");
  return BoundedReal(mid_, dyadic_round_up(rad_ + extra, kRadiusBits), prec_);
}

BoundedReal BoundedReal::rounded(int precision_bits) const {
  if (exact_value()) return exact(mid_, precision_bits);
  return with_bounds(lower(), upper(), precision_bits);
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (a.exact_value() && b.exact_value()) return BoundedReal::exact(a.mid_ + b.mid_, prec);
  return BoundedReal::with_bounds(a.lower() + b.lower(), a.upper() + b.upper(), prec);
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (a.exact_value() && b.exact_value()) return BoundedReal::exact(a.mid_ - b.mid_, prec);
  return BoundedReal::with_bounds(a.lower() - b.upper(), a.upper() - b.lower(), prec);
}

BoundedReal operator-(const BoundedReal& a) {
  return BoundedReal(-a.mid_, a.rad_, a.prec_);
}

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (a.exact_value() && b.exact_value()) return BoundedReal::exact(a.mid_ * b.mid_, prec);
  const std::array<Rational, 4> p = {
      a.lower() * b.lower(), a.lower() * b.upper(),
      a.upper() * b.lower(), a.upper() * b.upper()};
  Rational lo = p[0], hi = p[0];
  for (int i = 1; i < 4; ++i) {
    lo = min(lo, p[i]);
    hi = max(hi, p[i]);
  }
  return BoundedReal::with_bounds(lo, hi, prec);
}

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
  if (!(b.certainly_positive() || b.certainly_negative())) {
    throw std::domain_error("bounded_real: divisor interval contains zero");
  }
  const int prec = std::max(a.prec_, b.prec_);
  if (a.exact_value() && b.exact_value()) return BoundedReal::exact(a.mid_ / b.mid_, prec);
  const std::array<Rational, 4> p = {
      a.lower() / b.lower(), a.lower() / b.upper(),
      a.upper() / b.lower(), a.upper() / b.upper()};
  Rational lo = p[0], hi = p[0];
  for (int i = 1; i < 4; ++i) {
    lo = min(lo, p[i]);
    hi = max(hi, p[i]);
  }
  return BoundedReal::with_bounds(lo, hi, prec);
}

BoundedReal BoundedReal::abs() const {
  if (certainly_positive()) return *this;
  if (certainly_negative()) return -*this;
  return with_bounds(Rational(0), max(upper(), -lower()), prec_);
}

std::string BoundedReal::value_string() const {
  const int digits = (prec_ * 302 + 999) / 1000 + 2;
  const int work_bits = std::max(prec_, 4 * digits + 32);
  Mpfr f(work_bits);
  set_from_rational(f, mid_, MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, f.get());
  return std::string(buf.data());
}

namespace {

using UnaryDirected = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BoundedReal monotone_increasing(const BoundedReal& x, UnaryDirected fn, int prec) {
  Mpfr fl(prec + kGuardBits), fh(prec + kGuardBits);
  set_from_rational(fl, x.lower(), MPFR_RNDD);
  set_from_rational(fh, x.upper(), MPFR_RNDU);
  fn(fl.get(), fl.get(), MPFR_RNDD);
  fn(fh.get(), fh.get(), MPFR_RNDU);
  return BoundedReal::with_bounds(rational_from_mpfr(fl), rational_from_mpfr(fh), prec);
}

}  // namespace

BoundedReal exp(const BoundedReal& x) {
  return monotone_increasing(x, mpfr_exp, x.precision_bits());
}

BoundedReal ln(const BoundedReal& x) {
  if (!x.certainly_positive()) throw std::domain_error("ln: argument not certainly positive");
  return monotone_increasing(x, mpfr_log, x.precision_bits());
}

BoundedReal ln(const Rational& x, int precision_bits) {
  return ln(BoundedReal::exact(x, precision_bits));
}

BoundedReal pow_rat(const Rational& base, const Rational& exponent, int precision_bits) {
  if (base.sign() <= 0) throw std::domain_error("pow_rat: base must be positive");
  if (precision_bits < 16) throw std::invalid_argument("pow_rat: precision_bits must be >= 16");
  if (exponent.is_integer()) {
    if (!mpz_fits_slong_p(exponent.numerator().get_mpz_t())) {
      throw std::invalid_argument("pow_rat: integer exponent too large");
    }
    return BoundedReal::exact(base.pow(exponent.numerator().get_si()), precision_bits);
  }
  const int work = precision_bits + kGuardBits;
  const BoundedReal t = ln(base, work) * BoundedReal::exact(exponent, work);
  return exp(t).rounded(precision_bits);
}

BoundedReal log_ratio(const Rational& numer, const Rational& denom_base, int precision_bits) {
  if (numer.sign() <= 0) throw std::domain_error("log_ratio: numer must be positive");
  if (denom_base <= Rational(1)) throw std::domain_error("log_ratio: base must exceed 1");
  const int work = precision_bits + kGuardBits;
  return (ln(numer, work) / ln(denom_base, work)).rounded(precision_bits);
}

}  // namespace cantorflat
