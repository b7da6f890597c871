#pragma once

#include "pellrep/contfrac.hpp"
#include "pellrep/linforms.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <variant>
#include <vector>

namespace pellrep {

// The inequality 0 < |u·tau − v + mu| < A·B^(−w) with 1 <= u <= M.
struct ReductionInstance {
  RealExpr tau;
  RealExpr mu;
  mpq_class A;
  RealExpr B;
  mpz_class M;
};

struct ReductionOutcome {
  mpz_class q_used;
  std::size_t index;  // convergent index of q_used
  Interval epsilon;   // ‖mu·q‖ − M·‖tau·q‖, certified positive
  long w_max;         // every solution has w <= w_max
  int attempts;       // convergents tried
};

// Scans the convergent denominators q > 6M of tau in order and stops at the
// first one with a certified positive epsilon; gives up after 50 with
// EpsilonNeverPositive. The second overload reuses an expansion that must
// already reach past 6M.
ReductionOutcome baker_davenport(const ReductionInstance& inst,
                                 const PrecisionSchedule& schedule = {});
ReductionOutcome baker_davenport(const ReductionInstance& inst, const ContinuedFraction& cf,
                                 const PrecisionSchedule& schedule = {});

constexpr int kMaxConvergentAttempts = 50;

// Homogeneous case 0 < |y·tau − x| < A·B^(−w) with 0 < y < M: the bound
// w < log(A·(a(M)+2)·M)/log B.
struct LegendreOutcome {
  std::size_t index;  // N, the first index with q_N > M
  mpz_class a_M;
  mpz_class M_used;
  Interval value;  // log(A·(a(M)+2)·M)/log B
  long bound;      // floor of value.hi
};

LegendreOutcome legendre_bound(const ContinuedFraction& cf, const mpq_class& A, const RealExpr& B,
                               const mpz_class& M);

// Expansion of log b / log α reaching past 6M plus enough further
// convergents for every retry.
ContinuedFraction reduction_expansion(int base, const mpz_class& M,
                                      const PrecisionSchedule& schedule = {});

RealExpr tau_of_base(int base);

enum class Stage { L1Stage, NStage };

// d2 and l1 are unused (-1 / 0) in the l1 stage.
struct DigitParams {
  int d1 = 0;
  int d2 = -1;
  unsigned long l1 = 0;
};

struct InstanceResult {
  DigitParams digits;
  std::variant<ReductionOutcome, LegendreOutcome> outcome;
  long bound;
};

struct FamilyBound {
  SequenceKind kind;
  int base;
  Stage stage;
  mpz_class M;
  long raw_bound;  // max over the instances
  long bound;      // raw_bound, raised to cover the cases the argument set aside
  std::vector<InstanceResult> per_instance;
};

// Reduces l1 over every leading digit d1. The linearisation assumed
// l1 >= l1_threshold, so the result is never below l1_threshold − 1.
FamilyBound reduce_l1(SequenceKind kind, int base, const BoundLedger& ledger,
                      const PrecisionSchedule& schedule = {});

// Reduces n over every (d1, d2, l1) with l1 <= l1_max. Instances whose mu
// is an integer multiple of tau are routed to the Legendre bound.
FamilyBound reduce_n(SequenceKind kind, int base, long l1_max, const BoundLedger& ledger,
                     const PrecisionSchedule& schedule = {});

}  // namespace pellrep
