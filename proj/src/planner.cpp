// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/planner.hpp"

#include <optional>
#include <sstream>

namespace cantorflat {

bool Certificate::all_hold() const {
  if (entries.empty()) return false;
  for (const CertificateEntry& e : entries) {
    if (!e.holds) return false;
  }
  return true;
}

namespace {

// Sign of (log_s r / (1 + log_s r)) - p/q, decided exactly:
//   alpha(r,s) > p/q  <=>  log_s r > p/(q-p)  <=>  r^(q-p) > s^p   (p < q).
// For p/q >= 1 the comparison is always negative (alpha(r,s) < 1).
int compare_alpha_rs(long r, long s, const Rational& threshold) {
  if (threshold.sign() <= 0) return 1;
  const mpz_class p = threshold.numerator();
  const mpz_class q = threshold.denominator();
  if (p >= q) return -1;
  const mpz_class qp = q - p;
  if (!p.fits_ulong_p() || !qp.fits_ulong_p() || p > 100000 || qp > 100000) {
    throw std::invalid_argument("plan: threshold denominator too large for exact comparison");
  }
  mpz_class lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), mpz_class(r).get_mpz_t(), qp.get_ui());
  mpz_pow_ui(rhs.get_mpz_t(), mpz_class(s).get_mpz_t(), p.get_ui());
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

struct Margins {
  BoundedReal alpha;  // achieved level-set dimension
  BoundedReal beta;   // achieved image-set dimension
  std::vector<CertificateEntry> entries;
};

// The certificate inequalities, evaluated as rigorous enclosures:
//   1. alpha(r,s) > alpha_target
//   2. alpha(r,s) < alpha_target + eta
//   3. achieved alpha > alpha_target
//   4. achieved beta > 1/(k(1+log_s r)) - eta
//   5. achieved beta > (1 - alpha_target)/k - eta
Margins evaluate_margins(int k, long r, long s, const Rational& eps,
                         const Rational& alpha_target, const Rational& eta, int bits) {
  const int work = bits + 32;
  const Rational one_minus_eps = Rational(1) - eps;
  const BoundedReal ln_r = ln(Rational(r), work);
  const BoundedReal ln_s = ln(Rational(s), work);
  const BoundedReal ln_rs = ln(Rational(r * s), work);
  const BoundedReal ln_r_stretch = ln(Rational(r) / one_minus_eps, work);
  const BoundedReal ln_rs_stretch = ln(Rational(r * s) / one_minus_eps, work);

  Margins m;
  const BoundedReal alpha_rs = ln_r / ln_rs;
  m.alpha = (ln_r / (ln_s + ln_r_stretch)).rounded(bits);
  m.beta = (ln_s / ((Rational(k) + eps) * ln_rs_stretch)).rounded(bits);
  const BoundedReal beta_limit = ln_s / (Rational(k) * ln_rs);  // 1/(k(1+log_s r))

  auto entry = [](std::string name, const BoundedReal& margin) {
    return CertificateEntry{std::move(name), margin, margin.certainly_positive()};
  };
  m.entries.push_back(entry("alpha_rs_above_target", alpha_rs - alpha_target));
  m.entries.push_back(entry("alpha_rs_below_target_plus_eta",
                            Rational(alpha_target + eta) - alpha_rs));
  m.entries.push_back(entry("achieved_alpha_above_target", m.alpha - alpha_target));
  m.entries.push_back(entry("achieved_beta_near_limit", m.beta - (beta_limit - eta)));
  m.entries.push_back(entry(
      "achieved_beta_above_target_drop",
      m.beta - ((Rational(1) - alpha_target) / Rational(k) - eta)));
  return m;
}

bool margins_all_hold(const Margins& m) {
  for (const CertificateEntry& e : m.entries) {
    if (!e.holds) return false;
  }
  return true;
}

}  // namespace

PlanResult plan(const PlanRequest& request) {
  if (!(request.alpha_target > Rational(0) && request.alpha_target < Rational(1))) {
    throw std::invalid_argument("plan: alpha_target must lie in (0,1)");
  }
  if (!(request.eta > Rational(0))) throw std::invalid_argument("plan: eta must be positive");
  if (request.k < 1) throw std::invalid_argument("plan: k must be >= 1");

  const Rational upper = request.alpha_target + request.eta;
  std::optional<PlanResult> best_near_miss;
  Rational best_min_margin(-1000);

  for (long s = 2; s <= request.max_s; ++s) {
    for (long r = 2; r <= request.max_r; ++r) {
      if (compare_alpha_rs(r, s, request.alpha_target) <= 0) continue;  // window not reached
      if (compare_alpha_rs(r, s, upper) >= 0) break;                    // window passed
      const Rational eps_cap =
          min(Rational(1, 2), Rational(1, r * s - 1)) / Rational(2);
      Rational eps = eps_cap;
      for (int halving = 0; halving < 48; ++halving, eps = eps / Rational(2)) {
        int bits = request.precision_bits;
        Margins m = evaluate_margins(request.k, r, s, eps, request.alpha_target,
                                     request.eta, bits);
        // Escalate precision while any margin is numerically undecided.
        while (!margins_all_hold(m) && bits < 1024) {
          bool undecided = false;
          for (const CertificateEntry& e : m.entries) {
            if (!e.holds && !e.margin.certainly_negative()) undecided = true;
          }
          if (!undecided) break;
          bits *= 2;
          m = evaluate_margins(request.k, r, s, eps, request.alpha_target, request.eta, bits);
        }
        PlanResult candidate;
        candidate.params = ConstructionParams{request.k, static_cast<int>(r),
                                              static_cast<int>(s), eps, {},
                                              request.precision_bits};
        candidate.achieved_alpha = m.alpha;
        candidate.achieved_beta = m.beta;
        candidate.certificate = Certificate{m.entries};
        if (margins_all_hold(m)) return candidate;  // first success in scan order wins
        Rational min_margin(1000);
        for (const CertificateEntry& e : m.entries) min_margin = min(min_margin, e.margin.lower());
        if (min_margin > best_min_margin) {
          best_min_margin = min_margin;
          best_near_miss = std::move(candidate);
        }
      }
    }
  }

  std::ostringstream msg;
  msg << "plan: no parameters found within s <= " << request.max_s << ", r <= " << request.max_r;
  if (best_near_miss) {
    msg << "; best near-miss r = " << best_near_miss->params.r
        << ", s = " << best_near_miss->params.s
        << ", eps = " << best_near_miss->params.eps.str()
        << ", min margin = " << best_min_margin.to_double();
  }
  throw PlanError(msg.str());
}

Certificate certify(const ConstructionParams& params, const Rational& alpha_target,
                    const Rational& eta) {
  if (params.scheduled()) {
    throw std::invalid_argument("certify: only constant-schedule parameters are certifiable");
  }
  params.validate();
  const Margins m = evaluate_margins(params.k, params.r, params.s, params.eps, alpha_target,
                                     eta, params.precision_bits * 2);
  return Certificate{m.entries};
}

}  // namespace cantorflat
