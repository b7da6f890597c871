#pragma once

#include "pellrep/bigfloat.hpp"
#include "pellrep/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pellrep {

// Working-precision policy shared by every adaptive routine: start at
// `start_bits`, double on demand, give up past `cap_bits`.
struct PrecisionSchedule {
  unsigned long start_bits = 192;
  unsigned long cap_bits = 1'000'000;

  // Extra bits carried by eval() beyond what the caller asked for, so a
  // primitive evaluated "at p bits" really is accurate to p bits.
  static constexpr unsigned long kGuardBits = 32;
};

// Closed interval [lo, hi] with dyadic endpoints. Constructed so that the
// exact value it stands for always lies inside.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);

  // Tightest representable enclosure of an exact rational.
  static Interval point(const mpq_class& value, mpfr_prec_t precision);
  static Interval point(const mpz_class& value, mpfr_prec_t precision);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t bits() const { return lo_.precision(); }

  bool contains(const mpq_class& value) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }

  // hi - lo rounded up.
  BigFloat width() const;
  double midpoint() const;
  mpq_class lo_rational() const { return lo_.to_rational(); }
  mpq_class hi_rational() const { return hi_.to_rational(); }

  std::string to_string(int digits = 20) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const mpz_class& k);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval hull(const Interval& a, const Interval& b);
Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval pow(const Interval& x, long exponent);
Interval abs(const Interval& x);

// Enclosure of the distance from x to the nearest integer. Valid for any
// interval narrower than 1/2; throws PrecisionExhausted otherwise.
Interval distance_to_nearest_integer(const Interval& x);

// Immutable expression tree over integers, rationals, square roots of
// integers, logarithms and the field operations. Nodes are shared, so
// copies are cheap and safe to use from several threads.
class RealExpr {
 public:
  enum class Kind { Rational, Sqrt, Log, Add, Sub, Mul, Div, Neg, Pow };

  RealExpr(long value);  // NOLINT(google-explicit-constructor)
  RealExpr(const mpz_class& value);  // NOLINT
  RealExpr(const mpq_class& value);  // NOLINT

  static RealExpr sqrt_of(const mpz_class& radicand);
  static RealExpr log_of(const RealExpr& argument);
  static RealExpr pow(const RealExpr& base, long exponent);

  // α = 1 + √2 and β = 1 − √2.
  static RealExpr alpha();
  static RealExpr beta();

  friend RealExpr operator+(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator-(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator*(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator/(const RealExpr& a, const RealExpr& b);
  friend RealExpr operator-(const RealExpr& a);

  Kind kind() const;
  // True when the tree contains neither log nor an irrational sqrt; such
  // expressions are evaluated in exact rational arithmetic.
  bool is_exact() const;
  std::optional<mpq_class> exact_value() const;

  std::string to_string() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit RealExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

RealExpr log(const RealExpr& x);
RealExpr sqrt(const mpz_class& radicand);

// Enclosure of `expr` computed with `bits` (+ guard) bits of working
// precision. Division or log on an undecided sign is retried at a few
// doublings before the corresponding error is raised.
Interval eval(const RealExpr& expr, unsigned long bits);

mpz_class certified_floor(const RealExpr& expr, const PrecisionSchedule& schedule = {});

struct NearestInteger {
  Interval distance;
  mpz_class nearest;
};

NearestInteger nearest_integer_distance(const RealExpr& expr,
                                        const PrecisionSchedule& schedule = {});

// Parses the textual syntax used by the CLI, e.g. "log(2)/log(1+sqrt(2))".
// Accepts integers, decimals with exponents, + - * / ^, parentheses,
// sqrt(), log(), and the names `alpha`, `beta`. Throws InvalidArgument.
RealExpr parse_expr(const std::string& text);

}  // namespace pellrep
