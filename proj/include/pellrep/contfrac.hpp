#pragma once

#include "pellrep/precision.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace pellrep {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

// Certified continued-fraction prefix [a0; a1, ..., aK] of an irrational tau
// together with its convergents p_k/q_k (p_0 = a_0, q_0 = 1).
class ContinuedFraction {
 public:
  ContinuedFraction(RealExpr tau, std::vector<mpz_class> quotients);

  const RealExpr& tau() const { return tau_; }
  const std::vector<mpz_class>& quotients() const { return quotients_; }
  const std::vector<Convergent>& convergents() const { return convergents_; }
  std::size_t size() const { return quotients_.size(); }

  // Smallest k with q_k > threshold.
  std::optional<std::size_t> first_index_exceeding(const mpz_class& threshold) const;
  bool is_convergent(const mpz_class& x, const mpz_class& y) const;

 private:
  RealExpr tau_;
  std::vector<mpz_class> quotients_;
  std::vector<Convergent> convergents_;
};

// Partial quotients come from the Gauss map run on both endpoints of an
// enclosure of tau; a quotient is kept only when both endpoints agree on
// it. Precision doubles until the stopping condition is met. Structurally
// rational input raises RationalInput; a value the cap cannot separate from
// a rational raises PrecisionExhausted.
ContinuedFraction expand_until_q_exceeds(const RealExpr& tau, const mpz_class& threshold,
                                         const PrecisionSchedule& schedule = {});
ContinuedFraction expand_terms(const RealExpr& tau, std::size_t count,
                               const PrecisionSchedule& schedule = {});

struct PartialQuotientMax {
  std::size_t index;  // N: the smallest k with q_k > M
  mpz_class value;    // a(M) = max(a_0, ..., a_N)
};

PartialQuotientMax a_max(const ContinuedFraction& cf, const mpz_class& M);

// 1/((a(M)+2)·y²), a lower bound on |tau − x/y| for every integer x when
// 0 < y < M.
mpq_class legendre_lower_bound(const ContinuedFraction& cf, const mpz_class& M,
                               const mpz_class& y);

// Whether |tau − x/y| < 1/(2y²), decided with intervals. When true, x/y is
// checked against the expansion of tau and a std::logic_error is raised if
// it is not a convergent.
bool legendre_locate(const RealExpr& tau, const mpz_class& x, const mpz_class& y,
                     const PrecisionSchedule& schedule = {});

}  // namespace pellrep
