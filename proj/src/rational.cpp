// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace cantorflat {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_plain_integer(text)) {
      throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
    return Rational(mpz_class(text), mpz_class(1));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den) || den[0] == '-') {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::from_decimal_string(const std::string& text) {
  std::string s = text;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("decimal: cannot parse '" + text + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw std::invalid_argument("decimal: cannot parse '" + text + "'");
    }
  }
  long exp10 = 0;
  if (i < s.size()) {
    const std::string tail = s.substr(i + 1);
    if (!is_plain_integer(tail)) throw std::invalid_argument("decimal: cannot parse '" + text + "'");
    exp10 = std::strtol(tail.c_str(), nullptr, 10);
  }
  if (!seen_digit) throw std::invalid_argument("decimal: cannot parse '" + text + "'");

  mpz_class num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  const long net = exp10 - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net >= 0 ? net : -net));
  if (net >= 0) return Rational(num * scale, mpz_class(1));
  return Rational(num, scale);
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  const bool invert = exponent < 0;
  const unsigned long e = static_cast<unsigned long>(invert ? -exponent : exponent);
  if (invert && is_zero()) throw std::domain_error("rational: 0 to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), e);
  if (invert) std::swap(num, den);
  return Rational(std::move(num), std::move(den));
}

}  // namespace cantorflat
