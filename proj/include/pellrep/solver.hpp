#pragma once

#include "pellrep/reduction.hpp"
#include "pellrep/repdigits.hpp"
#include "pellrep/sequences.hpp"

#include <vector>

namespace pellrep {

struct Solution {
  SequenceKind kind;
  unsigned long n;
  mpz_class value;
  ConcatRepdigit repr;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SearchBox {
  int base;
  unsigned long n_max;
  long l1_max;
  long l2_max;
};

struct SolverReport {
  SequenceKind kind;
  int base_min;
  int base_max;
  BoundLedger ledger;
  std::vector<FamilyBound> family_bounds;  // l1 then n stage, per base
  std::vector<SearchBox> search_box;
  std::vector<Solution> solutions;         // sorted by (n, base)
};

// Every n <= n_max and every base in [base_min, base_max] where x_n has a
// two-block form. Sorted by (n, base).
std::vector<Solution> search_exhaustive(SequenceKind kind, unsigned long n_max, int base_min,
                                        int base_max);

// Initial bounds, both reductions for each base, then the exhaustive search
// up to the assumption threshold. Throws ReductionInsufficient if a reduced
// n bound does not fall below the threshold.
SolverReport solve(SequenceKind kind, int base_min, int base_max,
                   const PrecisionSchedule& schedule = {});

}  // namespace pellrep
