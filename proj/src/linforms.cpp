#include "pellrep/linforms.hpp"

#include <algorithm>
#include <numeric>

namespace pellrep {
namespace {

constexpr unsigned long kLedgerBits = 256;

mpq_class dec(const char* text) { return *parse_expr(text).exact_value(); }

mpq_class frac(long num, long den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Interval imax(const Interval& a, const Interval& b) {
  BigFloat lo = compare(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo();
  BigFloat hi = compare(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi();
  return Interval(std::move(lo), std::move(hi));
}

Interval point(const mpq_class& x) { return Interval::point(x, kLedgerBits); }

Interval ev(const RealExpr& e) { return eval(e, kLedgerBits); }

// log max(1, |r|) for an irrational r.
Interval log_max1(const RealExpr& r, unsigned long bits) {
  for (unsigned long b = bits; b <= (1UL << 20); b *= 2) {
    const Interval x = abs(eval(r, b));
    if (compare(x.lo(), mpz_class(1)) >= 0) return log(x);
    if (compare(x.hi(), mpz_class(1)) <= 0) return Interval::point(mpz_class(0), x.bits());
  }
  throw PrecisionExhausted("cannot compare |" + r.to_string() + "| with 1");
}

}  // namespace

RealExpr QuadraticNumber::expr() const { return RealExpr(u) + RealExpr(v) * RealExpr::sqrt_of(2); }

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  return {u * o.u + 2 * v * o.v, u * o.v + v * o.u};
}

std::vector<mpz_class> minimal_polynomial(const QuadraticNumber& x) {
  if (x.degree() == 1) return {-x.u.get_num(), x.u.get_den()};
  const mpq_class c1 = -2 * x.u;
  const mpq_class c0 = x.u * x.u - 2 * x.v * x.v;
  const mpz_class lead = lcm(c1.get_den(), c0.get_den());
  mpz_class a1 = c1.get_num() * (lead / c1.get_den());
  mpz_class a0 = c0.get_num() * (lead / c0.get_den());
  const mpz_class g = gcd(gcd(lead, a1), a0);
  return {a0 / g, a1 / g, lead / g};
}

Interval height(const QuadraticNumber& x, unsigned long bits) {
  if (x.is_zero()) throw ZeroInput("height of zero");
  if (x.degree() == 1) {
    mpz_class p = abs(x.u.get_num());
    const mpz_class& q = x.u.get_den();
    return eval(log(RealExpr(std::max(p, q))), bits);
  }
  const auto poly = minimal_polynomial(x);
  const RealExpr root_plus = RealExpr(x.u) + RealExpr(x.v) * RealExpr::sqrt_of(2);
  const RealExpr root_minus = RealExpr(x.u) - RealExpr(x.v) * RealExpr::sqrt_of(2);
  const Interval sum = eval(log(RealExpr(poly[2])), bits) + log_max1(root_plus, bits) +
                       log_max1(root_minus, bits);
  return sum / Interval::point(mpz_class(2), sum.bits());
}

Interval abs_log(const QuadraticNumber& x, unsigned long bits) {
  if (x.is_zero()) throw ZeroInput("log of zero");
  for (unsigned long b = bits; b <= (1UL << 20); b *= 2) {
    const Interval v = abs(eval(x.expr(), b));
    if (v.lo().sign() > 0) return abs(log(v));
  }
  throw PrecisionExhausted("cannot separate " + x.expr().to_string() + " from zero");
}

MatveevBound matveev_exponent(const MatveevInstance& inst, unsigned long bits) {
  if (inst.t < 1 || inst.D < 1) throw InvalidArgument("Matveev bound needs t >= 1 and D >= 1");
  if (inst.A.size() != static_cast<std::size_t>(inst.t)) {
    throw InvalidArgument("Matveev bound needs exactly t coefficients A_i");
  }
  for (const mpq_class& a : inst.A) {
    if (a < mpq_class(16, 100)) throw InvalidArgument("Matveev coefficients must be >= 0.16");
  }
  if (inst.B < 1) throw InvalidArgument("Matveev bound needs B >= 1");

  const long t = inst.t;
  const long D = inst.D;
  RealExpr c = RealExpr(mpq_class(14, 10)) * RealExpr::pow(RealExpr(30L), t + 3) *
               RealExpr::pow(RealExpr(t), 4) * RealExpr::sqrt_of(t) * RealExpr(D * D) *
               (RealExpr(1L) + log(RealExpr(D)));
  for (const mpq_class& a : inst.A) c = c * RealExpr(a);
  const RealExpr full = c * (RealExpr(1L) + log(RealExpr(inst.B)));
  return {eval(c, bits), eval(full, bits)};
}

FormConstants form_constants(SequenceKind kind) {
  if (kind == SequenceKind::Pell) {
    return {kind,        dec("9.5"),     dec("0.89"), dec("4.7"), dec("9.1"),
            dec("3.87e13"), dec("3"),    dec("1.5"),  dec("1.8"), dec("1.3"),
            110,         5,              dec("20.7"), dec("6.81")};
  }
  return {kind,       dec("4.4"),  dec("0.89"), dec("4.7"), dec("27"),
          dec("2e13"), dec("2"),   dec("3.2"),  dec("1.8"), dec("1.3"),
          300,        6,           dec("62"),   dec("4.6")};
}

BoundLedger derive_initial_bounds(SequenceKind kind) {
  return derive_initial_bounds(form_constants(kind));
}

BoundLedger derive_initial_bounds(const FormConstants& k) {
  const bool pell = k.kind == SequenceKind::Pell;
  const RealExpr alpha = RealExpr::alpha();
  const Interval log_alpha = ev(log(alpha));
  const Interval log2 = ev(log(RealExpr(2L)));
  const Interval log3 = ev(log(RealExpr(3L)));
  const Interval log10 = ev(log(RealExpr(10L)));
  const RealExpr abs_beta = RealExpr::sqrt_of(2) - RealExpr(1L);
  const Interval beta_tail = ev(RealExpr::pow(abs_beta, static_cast<long>(k.n_threshold) + 1));

  std::vector<AuditItem> audit;
  auto check = [&](std::string name, Interval required, const mpq_class& adopted, bool strict) {
    const int c = compare(required.hi(), adopted);
    const bool holds = strict ? c < 0 : c <= 0;
    audit.push_back({std::move(name), std::move(required), adopted, strict, holds});
  };
  const Interval floor_016 = point(mpq_class(16, 100));

  // A2 and A3.
  {
    const QuadraticNumber a{1, 1};
    check("A2 >= max(2*h(alpha), |log alpha|, 0.16)",
          imax(imax(point(2) * height(a), abs_log(a)), floor_016), k.a2, false);
    Interval worst = floor_016;
    for (int b = 2; b <= 10; ++b) {
      const QuadraticNumber g{b, 0};
      worst = imax(worst, imax(point(2) * height(g), abs_log(g)));
    }
    check("A3 >= max over b of max(2*h(b), log b)", worst, k.a3, false);
  }

  // A1 of the first form, over every base and leading digit.
  {
    Interval worst = floor_016;
    for (int b = 2; b <= 10; ++b) {
      for (int d1 = 1; d1 < b; ++d1) {
        // (b−1)/(2√2·d1) = ((b−1)/(4·d1))·√2
        const QuadraticNumber g =
            pell ? QuadraticNumber{0, frac(b - 1, 4 * d1)} : QuadraticNumber{frac(b - 1, d1), 0};
        worst = imax(worst, imax(point(2) * height(g), abs_log(g)));
      }
    }
    check(pell ? "A1 >= max over b, d1 of 2*h((b-1)/(2*sqrt(2)*d1))"
               : "A1 >= max over b, d1 of 2*h((b-1)/d1)",
          worst, k.a1_first, false);
  }

  // Residue of the first form times b^l1: (|d1−d2| + d2/b^l2)/d1 plus the β^n term.
  {
    mpq_class worst = 0;
    for (int b = 2; b <= 10; ++b) {
      for (int d1 = 1; d1 < b; ++d1) {
        for (int d2 = 0; d2 < b; ++d2) {
          if (d2 == d1) continue;
          mpq_class r = (mpq_class(std::abs(d1 - d2)) + frac(d2, b)) / d1;
          worst = std::max(worst, r);
        }
      }
    }
    check("first residue >= max (|d1-d2| + d2/b)/d1 + 9*|beta|^n",
          point(worst) + point(9) * beta_tail, k.first_residue, false);
  }

  // Residue of the second form times α^n.
  {
    const Interval digit_part =
        pell ? ev(RealExpr(2L) * RealExpr::sqrt_of(2)) : point(1);  // max d2/(b−1) = 1
    check(pell ? "second residue >= 2*sqrt(2) + |beta|^n" : "second residue >= 1 + |beta|^n",
          digit_part + beta_tail, k.second_residue, false);
  }

  // Height coefficient of the second form (valid since 1 + log 1.3n >= 1).
  const MatveevBound first = matveev_exponent({3, 2, {k.a1_first, k.a2, k.a3}, 1});
  {
    const Interval log9 = ev(log(RealExpr(9L)));
    const Interval log_res = ev(log(RealExpr(k.first_residue)));
    Interval extra = point(3) * log9 + log2 + log_res;
    if (pell) extra = extra + ev(log(RealExpr(8L))) / point(2);
    check(pell ? "h coefficient >= C1 + log(8)/2 + 3*log(9) + log(2) + log(first residue)"
               : "h coefficient >= C3 + 3*log(9) + log(2) + log(first residue)",
          first.leading + extra, k.h_coeff_second, false);
  }

  // Slack terms linking n*log(alpha) and (l1+l2)*log(b).
  check(pell ? "lower slack >= log(10) - log(alpha)" : "lower slack >= log(10) + log(alpha)",
        pell ? log10 - log_alpha : log10 + log_alpha, k.log_slack, false);
  check("upper slack >= 2*log(alpha)", point(2) * log_alpha, k.upper_slack, false);

  // l1 + l2 < b_factor * n for n > n_threshold.
  {
    const Interval ratio = log_alpha / log2;
    const Interval offset = pell ? ev(log(RealExpr(2L) / alpha)) / log2
                                 : ev(log(RealExpr(2L) * alpha)) / log2;
    Interval required = ratio;
    if (offset.hi().sign() > 0) required = ratio + offset / point(k.n_threshold + 1);
    check("B factor > log(alpha)/log(2) + max(0, offset)/n", required, k.b_factor, true);
  }

  // Conditions under which the logarithm can be linearised.
  check("first residue / 2^l1 < 1/2 at the smallest l1",
        point(k.first_residue / mpq_class(mpz_class(1) << k.l1_threshold)), mpq_class(1, 2),
        true);
  check("second residue / alpha^n < 1/2 at the smallest n",
        point(k.second_residue) / ev(RealExpr::pow(alpha, static_cast<long>(k.n_threshold) + 1)),
        mpq_class(1, 2), true);
  check("A for the l1 reduction >= 2*first residue/log(alpha)",
        point(2 * k.first_residue) / log_alpha, k.l1_stage_A, false);
  check("A for the n reduction >= 2*second residue/log(alpha)",
        point(2 * k.second_residue) / log_alpha, k.n_stage_A, false);

  std::string failures;
  for (const AuditItem& item : audit) {
    if (!item.holds) failures += "\n  " + item.name + ": needs " + item.required.to_string(8);
  }
  if (!failures.empty()) throw InvalidArgument("adopted constants fail their audit:" + failures);

  const MatveevBound second = matveev_exponent({3, 2, {k.a1_second(), k.a2, k.a3}, 1});

  // Smallest n with n·log α > C·(1 + log(1.3n))² + log(residue); the left
  // side minus the right is negative at the bottom of the range and
  // eventually increasing, so bisection on the certified sign is valid.
  const Interval log_res2 = ev(log(RealExpr(k.second_residue)));
  auto positive = [&](const mpz_class& n) {
    const Interval N = Interval::point(n, kLedgerBits);
    const Interval lg = point(1) + log(Interval::point(mpq_class(k.b_factor * n), kLedgerBits));
    const Interval f = N * log_alpha - second.leading * lg * lg - log_res2;
    return f.lo().sign() > 0;
  };
  mpz_class lo = 300;
  mpz_class hi;
  mpz_ui_pow_ui(hi.get_mpz_t(), 10, 40);
  if (!positive(hi)) throw NoFixpoint("closing inequality has no solution below 10^40");
  if (positive(lo)) {
    hi = lo;
  } else {
    while (hi - lo > 1) {
      const mpz_class mid = (lo + hi) / 2;
      (positive(mid) ? hi : lo) = mid;
    }
  }

  BoundLedger ledger{k.kind, k, first.leading, second.leading, hi, {}, {}, std::move(audit)};
  const Interval top = Interval::point(hi, kLedgerBits) * log_alpha + point(k.log_slack);
  auto ceiling = [](const Interval& x) {
    mpz_class c = x.hi().floor() + 1;
    return c;
  };
  for (int b = 2; b <= 10; ++b) {
    ledger.l1l2_max_by_base[b] = ceiling(top / (b == 2 ? log2 : log3));
    ledger.l1l2_max_sharp[b] = ceiling(top / ev(log(RealExpr(static_cast<long>(b)))));
  }
  return ledger;
}

}  // namespace pellrep
