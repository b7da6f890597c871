#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace pellrep {

enum class SequenceKind { Pell, PellLucas };

std::string_view name(SequenceKind kind);      // "pell" / "pell-lucas"
std::string_view symbol(SequenceKind kind);    // "P" / "Q"
SequenceKind parse_sequence_kind(std::string_view text);

struct SequenceTerm {
  SequenceKind kind;
  unsigned long n;
  mpz_class value;

  friend bool operator==(const SequenceTerm&, const SequenceTerm&) = default;
};

// x_n = 2 x_{n-1} + x_{n-2}; P_0 = 0, P_1 = 1; Q_0 = Q_1 = 2.
SequenceTerm term(SequenceKind kind, unsigned long n);
std::vector<SequenceTerm> terms_up_to(SequenceKind kind, unsigned long n_max);

// Whether the interval value of the Binet closed form at `bits` encloses
// the recurrence value. Requires n >= 1.
bool binet_check(SequenceKind kind, unsigned long n, unsigned long bits);

// Interval-certified check of α^(n-2) <= x_n <= α^(n-1) (Pell) or
// α^(n-2) <= x_n < α^(n+1) (Pell-Lucas). Requires n >= 1.
bool growth_bounds_hold(SequenceKind kind, unsigned long n, unsigned long bits);

}  // namespace pellrep
