#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pellrep {

// A base-b number written as d1 repeated l1 times followed by d2 repeated
// l2 times. d2 = 0 is allowed; d1 = d2 is not (that is a single repdigit).
struct ConcatRepdigit {
  int base = 10;
  int d1 = 1;
  std::uint64_t l1 = 1;
  int d2 = 0;
  std::uint64_t l2 = 1;

  // Validating constructor; throws InvalidArgument.
  static ConcatRepdigit make(int base, int d1, std::uint64_t l1, int d2, std::uint64_t l2);
  bool valid() const;

  // (d1·b^(l1+l2) − (d1−d2)·b^l2 − d2) / (b − 1)
  mpz_class value() const;
  std::string digit_string() const;

  friend bool operator==(const ConcatRepdigit&, const ConcatRepdigit&) = default;
  friend auto operator<=>(const ConcatRepdigit&, const ConcatRepdigit&) = default;
};

// Base-b digits of n, most significant first; n = 0 gives {0}.
std::vector<int> digits(const mpz_class& n, int base);

// The unique two-block decomposition of n in base b, if its digit string
// consists of exactly two maximal runs.
std::optional<ConcatRepdigit> decompose(const mpz_class& n, int base);

}  // namespace pellrep
