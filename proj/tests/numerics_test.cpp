#include <doctest.h>

#include "cantorflat/bounded_real.hpp"
#include "cantorflat/rational.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace cantorflat;
using testsupport::parse_decimal;
using testsupport::Rng;

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2).denominator() == 2);
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(7, 3).ceil() == 3);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational strings") {
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-5") == Rational(-5));
  CHECK(Rational::from_string("4/6").str() == "2/3");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);

  CHECK(Rational::from_decimal_string("3.25") == Rational(13, 4));
  CHECK(Rational::from_decimal_string("-0.5") == Rational(-1, 2));
  CHECK(Rational::from_decimal_string("6.02e2") == Rational(602));
  CHECK(Rational::from_decimal_string("1.5e-2") == Rational(3, 200));
}

TEST_CASE("dyadic rounding") {
  const Rational q(1, 3);
  const Rational up = dyadic_round_up(q, 32);
  CHECK(up >= q);
  CHECK(up - q < Rational(1, 1L << 30));
  const Rational near = dyadic_round_nearest(q, 32);
  CHECK((near - q).abs() < Rational(1, 1L << 30));
  CHECK(dyadic_round_up(Rational(0), 16) == Rational(0));
  // Dyadics representable at the target width come back unchanged.
  CHECK(dyadic_round_nearest(Rational(5, 8), 16) == Rational(5, 8));
  CHECK(dyadic_round_up(Rational(5, 8), 16) == Rational(5, 8));
}

TEST_CASE("bounded real arithmetic is a rigorous enclosure") {
  const BoundedReal half = BoundedReal::with_bounds(Rational(49, 100), Rational(51, 100), 64);
  CHECK(half.contains(Rational(1, 2)));
  const BoundedReal sum = half + half;
  CHECK(sum.contains(Rational(1)));
  const BoundedReal prod = half * half;
  CHECK(prod.contains(Rational(1, 4)));
  const BoundedReal quot = half / half;
  CHECK(quot.contains(Rational(1)));
  CHECK_THROWS_AS(half / (half - Rational(1, 2)), std::domain_error);

  const BoundedReal exact = BoundedReal::exact(Rational(7, 88)) * Rational(2);
  CHECK(exact.exact_value());
  CHECK(exact.midpoint() == Rational(7, 44));
}

TEST_CASE("pow_rat examples") {
  // Integer exponents are exact.
  const BoundedReal sq = pow_rat(Rational(1, 4), Rational(2));
  CHECK(sq.exact_value());
  CHECK(sq.midpoint() == Rational(1, 16));
  const BoundedReal zero_exp = pow_rat(Rational(22, 7), Rational(0));
  CHECK(zero_exp.exact_value());
  CHECK(zero_exp.midpoint() == Rational(1));

  // (1/242)^(23/22) against the frozen high-precision reference.
  const BoundedReal a2 = pow_rat(Rational(1, 242), Rational(23, 22), 128);
  const Rational ref = parse_decimal(refvals::kPowRat_1_242__23_22);
  CHECK((a2.midpoint() - ref).abs() <= a2.radius() + Rational(1, 10).pow(55));
  // Postcondition: error <= 2^(1-bits) * |value|.
  CHECK(a2.radius() <= Rational(2) * a2.midpoint().abs() / Rational(mpz_class(1) << 127, 1));

  CHECK_THROWS_AS(pow_rat(Rational(0), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(pow_rat(Rational(-1), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(pow_rat(Rational(2), Rational(1, 2), 8), std::invalid_argument);
}

TEST_CASE("log_ratio examples") {
  const BoundedReal two = log_ratio(Rational(4), Rational(2), 64);
  CHECK(two.contains(Rational(2)));
  const BoundedReal zero = log_ratio(Rational(1), Rational(7, 2), 64);
  CHECK(zero.contains(Rational(0)));
  const BoundedReal lr = log_ratio(Rational(88, 21), Rational(3), 128);
  const Rational ref = parse_decimal(refvals::kLogRatio_88_21_base3);
  CHECK((lr.midpoint() - ref).abs() <= lr.radius() + Rational(1, 10).pow(55));

  CHECK_THROWS_AS(log_ratio(Rational(-1), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(log_ratio(Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("pow_rat exponent additivity") {
  Rng rng(20260809);
  for (int i = 0; i < 200; ++i) {
    const Rational base = rng.rational_in(Rational(1, 100), Rational(100), 1000);
    const Rational m(rng.integer(-8, 8), rng.integer(1, 6));
    const Rational n(rng.integer(-8, 8), rng.integer(1, 6));
    const BoundedReal lhs = pow_rat(base, m + n, 96);
    const BoundedReal rhs = pow_rat(base, m, 96) * pow_rat(base, n, 96);
    CHECK(lhs.overlaps(rhs));
  }
}

TEST_CASE("interval soundness under re-evaluation at higher precision") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Rational p = rng.rational_in(Rational(1, 1000), Rational(1000), 10000);
    const Rational e(rng.integer(-6, 6), rng.integer(1, 5));
    const Rational q1 = rng.rational_in(Rational(-10), Rational(10), 1000);
    const Rational q2 = rng.rational_in(Rational(1, 10), Rational(10), 1000);

    auto build = [&](int bits) {
      const BoundedReal x = pow_rat(p, e, bits);
      const BoundedReal y = ln(x + Rational(1));
      const BoundedReal z = exp(y / Rational(3));
      return (z * q1 - q2) / (q2 + Rational(1));
    };
    const BoundedReal coarse = build(64);
    const BoundedReal fine = build(256);
    CHECK(coarse.lower() <= fine.midpoint());
    CHECK(fine.midpoint() <= coarse.upper());
    // Refining the precision never loosens the enclosure.
    CHECK(fine.radius() <= coarse.radius());
  }
}

TEST_CASE("log_ratio monotonicity") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational p = rng.rational_in(Rational(1), Rational(50), 1000);
    Rational q = rng.rational_in(Rational(1), Rational(50), 1000);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    const BoundedReal lp = log_ratio(p, Rational(3), 96);
    const BoundedReal lq = log_ratio(q, Rational(3), 96);
    CHECK(lp.lower() < lq.upper());
  }
}

TEST_CASE("value_string carries the required precision") {
  const BoundedReal v = pow_rat(Rational(1, 242), Rational(23, 22), 128);
  const std::string s = v.value_string();
  int digits = 0;
  for (char c : s) {
    if (c >= '0' && c <= '9') ++digits;
    if (c == 'e') break;
  }
  CHECK(digits >= (128 * 302 + 999) / 1000);
  // The printed decimal is itself a faithful approximation.
  const Rational reparsed = Rational::from_decimal_string(s);
  CHECK((reparsed - v.midpoint()).abs() < Rational(1, 10).pow(35));
}
