#pragma once

#include "pellrep/precision.hpp"
#include "pellrep/sequences.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace pellrep {

// u + v·√2 with rational u, v.
struct QuadraticNumber {
  mpq_class u;
  mpq_class v;

  int degree() const { return sgn(v) == 0 ? 1 : 2; }
  bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }
  RealExpr expr() const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
};

// Primitive integer minimal polynomial, constant term first:
// {a2, a1, a0} for a0·X² + a1·X + a2, or {a1, a0} in the rational case.
std::vector<mpz_class> minimal_polynomial(const QuadraticNumber& x);

// Absolute logarithmic height computed from the minimal polynomial.
// Throws ZeroInput for 0.
Interval height(const QuadraticNumber& x, unsigned long bits = 256);

// |log |x||. Throws ZeroInput for 0.
Interval abs_log(const QuadraticNumber& x, unsigned long bits = 256);

// Data for the lower bound |γ1^b1···γt^bt − 1| > exp(−C·(1 + log B)) with
// C = 1.4·30^(t+3)·t^4.5·D²·(1 + log D)·A1···At.
struct MatveevInstance {
  int t = 3;
  int D = 2;
  std::vector<mpq_class> A;
  mpq_class B = 1;
};

struct MatveevBound {
  Interval leading;  // C
  Interval full;     // C·(1 + log B)
};

MatveevBound matveev_exponent(const MatveevInstance& inst, unsigned long bits = 256);

// Constants fixed by hand in the two-stage argument for one sequence. Each
// one is re-checked by derive_initial_bounds and listed in the audit.
struct FormConstants {
  SequenceKind kind;
  mpq_class a1_first;          // A1 for the form (b−1)/(c·d1) · α^n · b^−(l1+l2) − 1
  mpq_class a2;                // ≥ log α
  mpq_class a3;                // ≥ 2 log 10
  mpq_class first_residue;     // |first form| < first_residue / b^l1
  mpq_class h_coeff_second;    // h(γ1) ≤ h_coeff_second · (1 + log 1.3n) for the second form
  mpq_class second_residue;    // |second form| < second_residue / α^n
  mpq_class log_slack;         // (l1+l2)·log b − log_slack < n·log α
  mpq_class upper_slack;       // n·log α < (l1+l2)·log b + upper_slack
  mpq_class b_factor;          // B = b_factor · n
  unsigned long n_threshold;   // the argument assumes n > n_threshold
  unsigned long l1_threshold;  // the first reduction assumes l1 >= l1_threshold
  mpq_class l1_stage_A;        // A for the reduction of l1
  mpq_class n_stage_A;         // A for the reduction of n

  mpq_class a1_second() const { return 2 * h_coeff_second; }
};

FormConstants form_constants(SequenceKind kind);

struct AuditItem {
  std::string name;
  Interval required;  // the quantity the adopted constant has to dominate
  mpq_class adopted;
  bool strict;
  bool holds;
};

struct BoundLedger {
  SequenceKind kind;
  FormConstants constants;
  Interval c_first;
  Interval c_second;
  // Every solution with n > n_threshold satisfies n < n_max.
  mpz_class n_max;
  // Strict upper bounds on l1 + l2. Base 2 uses log 2; all larger bases
  // share the bound obtained with log 3, which is what the reduction uses
  // for M.
  std::map<int, mpz_class> l1l2_max_by_base;
  // Same bound computed with each base's own log b.
  std::map<int, mpz_class> l1l2_max_sharp;
  std::vector<AuditItem> audit;

  const mpz_class& reduction_M(int base) const { return l1l2_max_by_base.at(base); }
};

// Runs both linear-form estimates, solves the closing inequality for n and
// converts it to l1 + l2 bounds. Throws InvalidArgument if an adopted
// constant fails its audit and NoFixpoint if the closing inequality has no
// solution below 10^40.
BoundLedger derive_initial_bounds(SequenceKind kind);
BoundLedger derive_initial_bounds(const FormConstants& constants);

}  // namespace pellrep
