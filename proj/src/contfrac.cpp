#include "pellrep/contfrac.hpp"

#include <algorithm>
#include <functional>

namespace pellrep {
namespace {

mpz_class floor_of(const mpq_class& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

// Partial quotients shared by every real in [lo, hi].
std::vector<mpz_class> certified_prefix(const Interval& x, std::size_t max_terms) {
  mpq_class lo = x.lo_rational();
  mpq_class hi = x.hi_rational();
  std::vector<mpz_class> out;
  while (out.size() < max_terms) {
    mpz_class a = floor_of(lo);
    if (a != floor_of(hi)) break;
    out.push_back(a);
    if (lo == a) break;  // the tail may be unbounded
    mpq_class next_lo = 1 / mpq_class(hi - a);
    mpq_class next_hi = 1 / mpq_class(lo - a);
    lo = std::move(next_lo);
    hi = std::move(next_hi);
  }
  return out;
}

std::vector<Convergent> convergents_of(const std::vector<mpz_class>& quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  mpz_class p_prev2 = 0, p_prev = 1, q_prev2 = 1, q_prev = 0;
  for (const mpz_class& a : quotients) {
    mpz_class p = a * p_prev + p_prev2;
    mpz_class q = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = p;
    q_prev = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

// Expands until `stop_index` reports how many leading terms are needed.
ContinuedFraction expand(const RealExpr& tau,
                         const std::function<std::optional<std::size_t>(
                             const std::vector<Convergent>&)>& stop_index,
                         std::size_t max_terms, const PrecisionSchedule& schedule) {
  if (tau.is_exact()) {
    throw RationalInput("continued fraction of the rational constant " + tau.to_string());
  }
  std::vector<mpz_class> previous;
  for (unsigned long bits = schedule.start_bits; bits <= schedule.cap_bits; bits *= 2) {
    std::vector<mpz_class> prefix = certified_prefix(eval(tau, bits), max_terms);
    const std::size_t overlap = std::min(prefix.size(), previous.size());
    if (!std::equal(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(overlap),
                    previous.begin())) {
      throw std::logic_error("certified partial quotients changed under refinement");
    }
    if (auto k = stop_index(convergents_of(prefix))) {
      prefix.resize(*k + 1);
      return ContinuedFraction(tau, std::move(prefix));
    }
    previous = std::move(prefix);
  }
  throw PrecisionExhausted("continued fraction of " + tau.to_string() + " stalled after " +
                           std::to_string(previous.size()) + " terms at " +
                           std::to_string(schedule.cap_bits) +
                           " bits; the value may be rational");
}

}  // namespace

ContinuedFraction::ContinuedFraction(RealExpr tau, std::vector<mpz_class> quotients)
    : tau_(std::move(tau)), quotients_(std::move(quotients)) {
  for (std::size_t k = 1; k < quotients_.size(); ++k) {
    if (quotients_[k] < 1) throw InvalidArgument("partial quotients a_k, k >= 1, must be >= 1");
  }
  convergents_ = convergents_of(quotients_);
}

std::optional<std::size_t> ContinuedFraction::first_index_exceeding(
    const mpz_class& threshold) const {
  for (std::size_t k = 0; k < convergents_.size(); ++k) {
    if (convergents_[k].q > threshold) return k;
  }
  return std::nullopt;
}

bool ContinuedFraction::is_convergent(const mpz_class& x, const mpz_class& y) const {
  return std::any_of(convergents_.begin(), convergents_.end(),
                     [&](const Convergent& c) { return c.p == x && c.q == y; });
}

ContinuedFraction expand_until_q_exceeds(const RealExpr& tau, const mpz_class& threshold,
                                         const PrecisionSchedule& schedule) {
  auto stop = [&](const std::vector<Convergent>& cs) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].q > threshold) return k;
    }
    return std::nullopt;
  };
  return expand(tau, stop, static_cast<std::size_t>(-1), schedule);
}

ContinuedFraction expand_terms(const RealExpr& tau, std::size_t count,
                               const PrecisionSchedule& schedule) {
  if (count == 0) throw InvalidArgument("expand_terms needs at least one term");
  auto stop = [&](const std::vector<Convergent>& cs) -> std::optional<std::size_t> {
    if (cs.size() >= count) return count - 1;
    return std::nullopt;
  };
  return expand(tau, stop, count, schedule);
}

PartialQuotientMax a_max(const ContinuedFraction& cf, const mpz_class& M) {
  if (M < 1) throw InvalidArgument("a_max requires M >= 1");
  auto n = cf.first_index_exceeding(M);
  if (!n) {
    throw InsufficientExpansion("expansion of " + cf.tau().to_string() +
                                " ends before a denominator exceeds " + M.get_str());
  }
  const auto& a = cf.quotients();
  mpz_class best = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(*n) + 1);
  return {*n, best};
}

mpq_class legendre_lower_bound(const ContinuedFraction& cf, const mpz_class& M,
                               const mpz_class& y) {
  if (y <= 0 || y >= M) throw InvalidArgument("legendre_lower_bound requires 0 < y < M");
  const PartialQuotientMax am = a_max(cf, M);
  mpq_class out(mpz_class(1), (am.value + 2) * y * y);
  out.canonicalize();
  return out;
}

bool legendre_locate(const RealExpr& tau, const mpz_class& x, const mpz_class& y,
                     const PrecisionSchedule& schedule) {
  if (y <= 0) throw InvalidArgument("legendre_locate requires y > 0");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g != 1) throw InvalidArgument("legendre_locate requires gcd(x, y) = 1");

  const mpq_class bound(mpz_class(1), 2 * y * y);
  const RealExpr gap = tau - RealExpr(mpq_class(x, y));
  std::optional<bool> close;
  for (unsigned long bits = schedule.start_bits; bits <= schedule.cap_bits && !close; bits *= 2) {
    const Interval d = abs(eval(gap, bits));
    if (compare(d.hi(), bound) < 0) {
      close = true;
    } else if (compare(d.lo(), bound) >= 0) {
      close = false;
    }
  }
  if (!close) {
    throw PrecisionExhausted("cannot compare |tau - x/y| with 1/(2y^2) for tau = " +
                             tau.to_string());
  }
  if (*close) {
    const ContinuedFraction cf = expand_until_q_exceeds(tau, y, schedule);
    if (!cf.is_convergent(x, y)) {
      throw std::logic_error("Legendre criterion violated: " + x.get_str() + "/" + y.get_str() +
                             " is not a convergent of " + tau.to_string());
    }
  }
  return *close;
}

}  // namespace pellrep
