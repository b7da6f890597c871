#pragma once

#include "pellrep/precision.hpp"

namespace pellrep {

struct RealExpr::Node {
  Kind kind = Kind::Rational;
  mpq_class value;     // Rational
  mpz_class radicand;  // Sqrt
  long exponent = 0;   // Pow
  std::vector<RealExpr> children;
  bool exact = true;  // only Rational nodes are exact
};

}  // namespace pellrep
