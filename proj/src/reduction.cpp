#include "pellrep/reduction.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace pellrep {
namespace {

constexpr unsigned long kBoundBits = 256;

// k >= 0 with x = base^k, if there is one.
std::optional<long> power_of_base(const mpq_class& x, int base) {
  if (x.get_den() != 1 || x.get_num() < 1) return std::nullopt;
  mpz_class n = x.get_num();
  long k = 0;
  while (n % base == 0) {
    n /= base;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

unsigned long bit_length(const mpz_class& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

long floor_to_long(const BigFloat& x) {
  const mpz_class f = x.floor();
  if (!f.fits_slong_p()) throw PrecisionExhausted("bound does not fit in a machine integer");
  return f.get_si();
}

// ‖mu·q‖ − M·‖tau·q‖ when it is certified positive. A sign that stays
// undecided after a few doublings counts as not positive.
std::optional<Interval> positive_epsilon(const ReductionInstance& inst, const mpz_class& q,
                                         const PrecisionSchedule& schedule) {
  unsigned long bits =
      std::max(schedule.start_bits, bit_length(q) + bit_length(inst.M) + 96);
  const RealExpr tq = RealExpr(q) * inst.tau;
  const RealExpr mq = RealExpr(q) * inst.mu;
  for (int i = 0; i < 6 && bits <= schedule.cap_bits; ++i, bits *= 2) {
    try {
      const Interval dt = distance_to_nearest_integer(eval(tq, bits));
      const Interval dm = distance_to_nearest_integer(eval(mq, bits));
      Interval eps = dm - dt * inst.M;
      if (eps.lo().sign() > 0) return eps;
      if (eps.hi().sign() <= 0) return std::nullopt;
    } catch (const PrecisionExhausted&) {
      // interval still too wide; retry with more bits
    }
  }
  return std::nullopt;
}

void validate(const ReductionInstance& inst) {
  if (sgn(inst.A) <= 0) throw InvalidArgument("reduction needs A > 0");
  if (inst.M < 1) throw InvalidArgument("reduction needs M >= 1");
  if (inst.tau.is_exact()) throw RationalInput("reduction needs an irrational tau");
  if (compare(eval(inst.B, kBoundBits).lo(), mpz_class(1)) <= 0) {
    throw InvalidArgument("reduction needs B > 1");
  }
}

std::string describe(SequenceKind kind, int base, const DigitParams& p) {
  std::string out = std::string(name(kind)) + ", b=" + std::to_string(base) +
                    ", d1=" + std::to_string(p.d1);
  if (p.d2 >= 0) out += ", d2=" + std::to_string(p.d2);
  if (p.l1 > 0) out += ", l1=" + std::to_string(p.l1);
  return out;
}

}  // namespace

RealExpr tau_of_base(int base) {
  if (base < 2 || base > 10) throw InvalidArgument("base must lie in [2, 10]");
  return log(RealExpr(static_cast<long>(base))) / log(RealExpr::alpha());
}

ContinuedFraction reduction_expansion(int base, const mpz_class& M,
                                      const PrecisionSchedule& schedule) {
  const RealExpr tau = tau_of_base(base);
  const ContinuedFraction head = expand_until_q_exceeds(tau, 6 * M, schedule);
  return expand_terms(tau, head.size() + kMaxConvergentAttempts, schedule);
}

ReductionOutcome baker_davenport(const ReductionInstance& inst,
                                 const PrecisionSchedule& schedule) {
  validate(inst);
  const ContinuedFraction head = expand_until_q_exceeds(inst.tau, 6 * inst.M, schedule);
  const ContinuedFraction cf =
      expand_terms(inst.tau, head.size() + kMaxConvergentAttempts, schedule);
  return baker_davenport(inst, cf, schedule);
}

ReductionOutcome baker_davenport(const ReductionInstance& inst, const ContinuedFraction& cf,
                                 const PrecisionSchedule& schedule) {
  validate(inst);
  const auto start = cf.first_index_exceeding(6 * inst.M);
  if (!start) throw InsufficientExpansion("expansion does not reach a denominator above 6M");
  int attempts = 0;
  for (std::size_t k = *start; attempts < kMaxConvergentAttempts; ++k) {
    if (k >= cf.size()) {
      throw InsufficientExpansion("expansion ran out after " + std::to_string(attempts) +
                                  " convergents past 6M");
    }
    ++attempts;
    const mpz_class& q = cf.convergents()[k].q;
    auto eps = positive_epsilon(inst, q, schedule);
    if (!eps) continue;
    const mpfr_prec_t prec = eps->bits();
    const Interval num = Interval::point(inst.A, prec) * Interval::point(q, prec) /
                         Interval(eps->lo(), eps->lo());
    const Interval w = log(num) / log(eval(inst.B, static_cast<unsigned long>(prec)));
    const long w_max = std::max(0L, floor_to_long(w.hi()));
    return {q, k, std::move(*eps), w_max, attempts};
  }
  throw EpsilonNeverPositive("epsilon not positive for " + std::to_string(kMaxConvergentAttempts) +
                             " convergents with mu = " + inst.mu.to_string());
}

LegendreOutcome legendre_bound(const ContinuedFraction& cf, const mpq_class& A, const RealExpr& B,
                               const mpz_class& M) {
  if (sgn(A) <= 0) throw InvalidArgument("Legendre bound needs A > 0");
  const PartialQuotientMax am = a_max(cf, M);
  const RealExpr value =
      log(RealExpr(A) * RealExpr(mpz_class(am.value + 2)) * RealExpr(M)) / log(B);
  Interval v = eval(value, kBoundBits);
  const long bound = floor_to_long(v.hi());
  return {am.index, am.value, M, std::move(v), bound};
}

FamilyBound reduce_l1(SequenceKind kind, int base, const BoundLedger& ledger,
                      const PrecisionSchedule& schedule) {
  if (ledger.kind != kind) throw InvalidArgument("ledger belongs to the other sequence");
  const FormConstants& k = ledger.constants;
  const mpz_class& M = ledger.reduction_M(base);
  const ContinuedFraction cf = reduction_expansion(base, M, schedule);
  const RealExpr log_alpha = log(RealExpr::alpha());
  const RealExpr B(static_cast<long>(base));

  FamilyBound out{kind, base, Stage::L1Stage, M, 0, 0, {}};
  for (int d1 = 1; d1 < base; ++d1) {
    const DigitParams p{d1, -1, 0};
    mpq_class ratio(base - 1, d1);
    ratio.canonicalize();
    if (kind == SequenceKind::PellLucas) {
      if (auto shift = power_of_base(ratio, base)) {
        // mu = −shift·tau, so the form is (l1 + l2 − shift)·tau − n.
        LegendreOutcome lo = legendre_bound(cf, k.l1_stage_A, B, M);
        const long bound = lo.bound;
        out.per_instance.push_back({p, std::move(lo), bound});
        continue;
      }
    }
    RealExpr gamma = RealExpr(ratio);
    if (kind == SequenceKind::Pell) gamma = gamma / (RealExpr(2L) * RealExpr::sqrt_of(2));
    const ReductionInstance inst{cf.tau(), -log(gamma) / log_alpha, k.l1_stage_A, B, M};
    try {
      ReductionOutcome r = baker_davenport(inst, cf, schedule);
      const long bound = r.w_max;
      out.per_instance.push_back({p, std::move(r), bound});
    } catch (const EpsilonNeverPositive& e) {
      throw EpsilonNeverPositive(describe(kind, base, p) + ": " + e.what());
    }
  }
  for (const auto& r : out.per_instance) out.raw_bound = std::max(out.raw_bound, r.bound);
  out.bound = std::max<long>(out.raw_bound, static_cast<long>(k.l1_threshold) - 1);
  return out;
}

FamilyBound reduce_n(SequenceKind kind, int base, long l1_max, const BoundLedger& ledger,
                     const PrecisionSchedule& schedule) {
  if (ledger.kind != kind) throw InvalidArgument("ledger belongs to the other sequence");
  if (l1_max < 1) throw InvalidArgument("reduce_n needs l1_max >= 1");
  const FormConstants& k = ledger.constants;
  const mpz_class& M = ledger.reduction_M(base);
  const ContinuedFraction cf = reduction_expansion(base, M, schedule);
  const RealExpr alpha = RealExpr::alpha();
  const RealExpr log_alpha = log(alpha);
  const RealExpr two_sqrt2 = RealExpr(2L) * RealExpr::sqrt_of(2);

  FamilyBound out{kind, base, Stage::NStage, M, 0, 0, {}};
  for (int d1 = 1; d1 < base; ++d1) {
    for (int d2 = 0; d2 < base; ++d2) {
      if (d2 == d1) continue;
      mpz_class power = 1;
      for (long l1 = 1; l1 <= l1_max; ++l1) {
        power *= base;
        const DigitParams p{d1, d2, static_cast<unsigned long>(l1)};
        mpq_class m(d1 * power - (d1 - d2), base - 1);
        m.canonicalize();
        if (kind == SequenceKind::PellLucas) {
          if (auto shift = power_of_base(m, base)) {
            // mu = shift·tau, so the form is (l2 + shift)·tau − n with
            // 0 < l2 + shift < M + shift.
            LegendreOutcome lo = legendre_bound(cf, k.n_stage_A, alpha, M + *shift);
            const long bound = lo.bound;
            out.per_instance.push_back({p, std::move(lo), bound});
            continue;
          }
        }
        const RealExpr gamma =
            kind == SequenceKind::Pell ? RealExpr(m) * two_sqrt2 : RealExpr(m);
        const ReductionInstance inst{cf.tau(), log(gamma) / log_alpha, k.n_stage_A, alpha, M};
        try {
          ReductionOutcome r = baker_davenport(inst, cf, schedule);
          const long bound = r.w_max;
          out.per_instance.push_back({p, std::move(r), bound});
        } catch (const EpsilonNeverPositive& e) {
          throw EpsilonNeverPositive(describe(kind, base, p) + ": " + e.what());
        }
      }
    }
  }
  const auto expected = static_cast<std::size_t>((base - 1) * (base - 1)) *
                        static_cast<std::size_t>(l1_max);
  if (out.per_instance.size() != expected) {
    throw std::logic_error("digit families do not partition the search space");
  }
  for (const auto& r : out.per_instance) out.raw_bound = std::max(out.raw_bound, r.bound);
  out.bound = out.raw_bound;
  return out;
}

}  // namespace pellrep
