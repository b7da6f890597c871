#include "pellrep/contfrac.hpp"
#include "pellrep/errors.hpp"
#include "pellrep/sequences.hpp"

#include "quadratic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pellrep;

namespace {

// Reference partial quotients from the high precision value.
std::vector<mpz_class> ref_quotients(const testing::Ref& x, std::size_t count) {
  std::vector<mpz_class> out;
  testing::Ref r = x;
  testing::Ref fl;
  for (std::size_t k = 0; k < count; ++k) {
    mpfr_floor(fl.get(), r.get());
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    out.push_back(a);
    mpfr_sub(r.get(), r.get(), fl.get(), MPFR_RNDN);
    mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  }
  return out;
}

void check_invariants(const ContinuedFraction& cf) { CHECK(testing::convergent_violation(cf) == ""); }

RealExpr tau_of_base_expr(long b) { return log(RealExpr(b)) / log(RealExpr::alpha()); }

RealExpr golden() { return (RealExpr(1) + sqrt(mpz_class(5))) / RealExpr(2); }

}  // namespace

TEST_CASE("log 2 / log alpha past 6·1.17e30") {
  const mpz_class threshold = testing::dec("7.02e30").get_num();
  ContinuedFraction cf = expand_until_q_exceeds(tau_of_base_expr(2), threshold);
  auto k = cf.first_index_exceeding(threshold);
  REQUIRE(k.has_value());
  CHECK(*k >= 60);
  CHECK(*k <= 63);
  CHECK(cf.convergents().back().q > threshold);
  CHECK(cf.quotients() == ref_quotients(testing::ref_tau(2), cf.size()));
}

TEST_CASE("golden ratio expands to ones over Fibonacci denominators") {
  ContinuedFraction cf = expand_until_q_exceeds(golden(), 100);
  mpz_class f0 = 1, f1 = 1;
  for (std::size_t k = 0; k < cf.size(); ++k) {
    CHECK(cf.quotients()[k] == 1);
    CHECK(cf.convergents()[k].q == f0);
    mpz_class next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  CHECK(cf.convergents().back().q > 100);
}

TEST_CASE("sqrt 2 expands to [1; 2, 2, ...] over Pell denominators") {
  ContinuedFraction cf = expand_until_q_exceeds(sqrt(mpz_class(2)), 1000);
  CHECK(cf.quotients()[0] == 1);
  for (std::size_t k = 1; k < cf.size(); ++k) CHECK(cf.quotients()[k] == 2);
  for (std::size_t k = 0; k < cf.size(); ++k) {
    CHECK(cf.convergents()[k].q == term(SequenceKind::Pell, k + 1).value);
  }
}

TEST_CASE("a_max examples") {
  const mpz_class m2 = testing::dec("1.17e30").get_num();
  const mpz_class m6 = testing::dec("7.39e29").get_num();
  CHECK(a_max(expand_until_q_exceeds(tau_of_base_expr(2), m2), m2).value == 100);
  CHECK(a_max(expand_until_q_exceeds(tau_of_base_expr(6), m6), m6).value == 509);
  for (long M : {1L, 10L, 1000L, 1000000L}) {
    CHECK(a_max(expand_until_q_exceeds(golden(), M), M).value == 1);
  }
  ContinuedFraction shortcf = expand_terms(golden(), 5);
  CHECK_THROWS_AS(a_max(shortcf, mpz_class(1000)), InsufficientExpansion);
}

TEST_CASE("legendre_lower_bound examples") {
  const mpz_class M = testing::dec("1.17e30").get_num();
  ContinuedFraction cf = expand_until_q_exceeds(tau_of_base_expr(2), M);
  const mpz_class y = M - 1;
  CHECK(legendre_lower_bound(cf, M, y) == mpq_class(1, 102 * y * y));

  ContinuedFraction g = expand_until_q_exceeds(golden(), 1000000);
  CHECK(legendre_lower_bound(g, 1000000, 10) == mpq_class(1, 300));

  ContinuedFraction s = expand_until_q_exceeds(sqrt(mpz_class(2)), 1000);
  CHECK(legendre_lower_bound(s, 1000, 5) == mpq_class(1, 100));
  // brute force: every x/5 stays at least 1/100 away from sqrt 2
  testing::Ref r2 = testing::ref_sqrt(2);
  for (long x = -20; x <= 20; ++x) {
    testing::Ref d = r2;
    mpfr_sub_d(d.get(), d.get(), static_cast<double>(x) / 5.0, MPFR_RNDN);
    CHECK(std::abs(mpfr_get_d(d.get(), MPFR_RNDN)) >= 0.01);
  }
  CHECK_THROWS_AS(legendre_lower_bound(s, 1000, 0), InvalidArgument);
  CHECK_THROWS_AS(legendre_lower_bound(s, 1000, 1000), InvalidArgument);
}

TEST_CASE("legendre_locate examples") {
  const RealExpr s = sqrt(mpz_class(2));
  CHECK(legendre_locate(s, 7, 5));
  CHECK(legendre_locate(s, 3, 2));
  CHECK(expand_until_q_exceeds(s, 10).is_convergent(3, 2));
  CHECK_FALSE(legendre_locate(tau_of_base_expr(2), 0, 1));
  CHECK_FALSE(legendre_locate(s, 4, 3));
  CHECK_THROWS_AS(legendre_locate(s, 14, 10), InvalidArgument);
  CHECK_THROWS_AS(legendre_locate(s, 1, 0), InvalidArgument);
}

TEST_CASE("random quadratic irrationals") {
  for (int i = 0; i < 1000; ++i) {
    testing::Quadratic qd = testing::random_quadratic(testing::rng(), 25);
    ContinuedFraction cf = expand_terms(qd.tau, 25);
    REQUIRE(cf.quotients() == qd.quotients);
    check_invariants(cf);
    const auto& c = cf.convergents();
    // every convergent is either rejected or confirmed, never contradicted
    for (std::size_t k = 0; k < 10; ++k) CHECK_NOTHROW(legendre_locate(qd.tau, c[k].p, c[k].q));
    // a fraction that is not a convergent is never accepted
    for (int j = 0; j < 5; ++j) {
      mpz_class y = testing::uniform(1, 2000);
      mpz_class x = testing::uniform(-4000, 4000);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      if (g != 1 || cf.is_convergent(x, y)) continue;
      CHECK_FALSE(legendre_locate(qd.tau, x, y));
    }
  }
}

TEST_CASE("the nine log b / log alpha") {
  for (int b = 2; b <= 10; ++b) {
    ContinuedFraction cf = expand_terms(tau_of_base_expr(b), 80);
    CHECK(cf.quotients() == ref_quotients(testing::ref_tau(b), 80));
    check_invariants(cf);
    for (std::size_t k = 0; k < 40; ++k) {
      CHECK_NOTHROW(legendre_locate(cf.tau(), cf.convergents()[k].p, cf.convergents()[k].q));
    }
  }
}

TEST_CASE("convergents are best approximations") {
  for (const RealExpr& tau : {sqrt(mpz_class(2)), tau_of_base_expr(3), golden()}) {
    ContinuedFraction cf = expand_until_q_exceeds(tau, 10000);
    // k = 0 is excluded: with a_1 = 1 the fraction (a_0 + 1)/1 beats a_0/1
    for (std::size_t k = 1; k < cf.size(); ++k) {
      const Convergent& c = cf.convergents()[k];
      if (c.q > 10000) break;
      Interval best = abs(eval(tau * RealExpr(c.q) - RealExpr(c.p), 128));
      for (mpz_class y = 1; y <= c.q; ++y) {
        Interval scaled = eval(tau * RealExpr(y), 128);
        mpz_class x = (scaled.lo().floor() + scaled.hi().ceil()) / 2;
        for (mpz_class cand = x - 1; cand <= x + 1; ++cand) {
          if (y == c.q && cand == c.p) continue;
          Interval other = abs(eval(tau * RealExpr(y) - RealExpr(cand), 128));
          CHECK(compare(best.lo(), other.hi()) <= 0);
        }
      }
    }
  }
}

TEST_CASE("expansions are stable under refinement") {
  PrecisionSchedule coarse{192};
  PrecisionSchedule fine{768};
  for (int b = 2; b <= 10; ++b) {
    auto a = expand_terms(tau_of_base_expr(b), 60, coarse);
    auto c = expand_terms(tau_of_base_expr(b), 60, fine);
    CHECK(a.quotients() == c.quotients());
  }
}

TEST_CASE("rational and undecidable inputs") {
  CHECK_THROWS_AS(expand_terms(RealExpr(mpq_class(3, 7)), 5), RationalInput);
  const RealExpr s = sqrt(mpz_class(2));
  const RealExpr hidden = RealExpr(mpq_class(1, 3)) + s - s;
  CHECK_THROWS_AS(expand_terms(hidden, 10, PrecisionSchedule{192, 4096}), PrecisionExhausted);
  CHECK_THROWS_AS(ContinuedFraction(s, {1, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(expand_terms(s, 0), InvalidArgument);
}
