#include "pellrep/precision.hpp"
#include "real_expr_node.hpp"

namespace pellrep {
namespace {

// Raised inside one evaluation pass when a sign could not be decided at the
// current precision. eval() converts it into a retry, then into the public
// error once the retries are used up.
struct Undecided {
  bool division;
  std::string what;
};

constexpr int kEvalRetries = 4;

Interval eval_at(const RealExpr& e, mpfr_prec_t prec) {
  const RealExpr::Node& n = e.node();
  switch (n.kind) {
    case RealExpr::Kind::Rational:
      return Interval::point(n.value, prec);
    case RealExpr::Kind::Sqrt: {
      BigFloat lo(prec), hi(prec);
      mpfr_set_z(lo.get(), n.radicand.get_mpz_t(), MPFR_RNDD);
      mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
      mpfr_set_z(hi.get(), n.radicand.get_mpz_t(), MPFR_RNDU);
      mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
      return Interval(std::move(lo), std::move(hi));
    }
    case RealExpr::Kind::Log: {
      const RealExpr& arg = n.children[0];
      if (arg.is_exact() && sgn(*arg.exact_value()) <= 0) {
        throw LogOfIntervalTouchingZero("log of the non-positive constant " + arg.to_string());
      }
      Interval x = eval_at(arg, prec);
      if (x.lo().sign() <= 0) throw Undecided{false, "log argument " + arg.to_string()};
      return log(x);
    }
    case RealExpr::Kind::Add:
      return eval_at(n.children[0], prec) + eval_at(n.children[1], prec);
    case RealExpr::Kind::Sub:
      return eval_at(n.children[0], prec) - eval_at(n.children[1], prec);
    case RealExpr::Kind::Mul:
      return eval_at(n.children[0], prec) * eval_at(n.children[1], prec);
    case RealExpr::Kind::Neg:
      return -eval_at(n.children[0], prec);
    case RealExpr::Kind::Div: {
      const RealExpr& den = n.children[1];
      if (den.is_exact() && sgn(*den.exact_value()) == 0) {
        throw DivisionByIntervalContainingZero("division by the exact zero in " + e.to_string());
      }
      Interval d = eval_at(den, prec);
      if (d.contains_zero()) throw Undecided{true, "denominator " + den.to_string()};
      return eval_at(n.children[0], prec) / d;
    }
    case RealExpr::Kind::Pow: {
      const RealExpr& base = n.children[0];
      if (base.is_exact() && sgn(*base.exact_value()) == 0) {
        throw DivisionByIntervalContainingZero("negative power of zero in " + e.to_string());
      }
      Interval x = eval_at(base, prec);
      if (n.exponent < 0 && x.contains_zero()) {
        throw Undecided{true, "negative power of " + base.to_string()};
      }
      return pow(x, n.exponent);
    }
  }
  throw std::logic_error("unhandled RealExpr kind");
}

mpz_class floor_of(const mpq_class& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace

Interval eval(const RealExpr& expr, unsigned long bits) {
  if (bits < 32) throw InvalidArgument("eval requires at least 32 bits of precision");
  auto prec = static_cast<mpfr_prec_t>(bits + PrecisionSchedule::kGuardBits);
  for (int attempt = 0;; ++attempt) {
    try {
      return eval_at(expr, prec);
    } catch (const Undecided& u) {
      if (attempt + 1 >= kEvalRetries) {
        if (u.division) {
          throw DivisionByIntervalContainingZero("cannot separate " + u.what + " from zero");
        }
        throw LogOfIntervalTouchingZero("cannot separate " + u.what + " from zero");
      }
      prec *= 2;
    }
  }
}

mpz_class certified_floor(const RealExpr& expr, const PrecisionSchedule& schedule) {
  if (auto exact = expr.exact_value()) return floor_of(*exact);
  for (unsigned long bits = schedule.start_bits; bits <= schedule.cap_bits; bits *= 2) {
    const Interval x = eval(expr, bits);
    mpz_class lo = x.lo().floor();
    if (lo == x.hi().floor()) return lo;
  }
  throw PrecisionExhausted("floor of " + expr.to_string() + " undecided at " +
                           std::to_string(schedule.cap_bits) +
                           " bits; the value may be an integer");
}

NearestInteger nearest_integer_distance(const RealExpr& expr, const PrecisionSchedule& schedule) {
  if (auto exact = expr.exact_value()) {
    const mpz_class k = floor_of(*exact + mpq_class(1, 2));
    mpq_class d = *exact - k;
    if (sgn(d) < 0) d = -d;
    return {Interval::point(d, static_cast<mpfr_prec_t>(schedule.start_bits)), k};
  }
  for (unsigned long bits = schedule.start_bits; bits <= schedule.cap_bits; bits *= 2) {
    const Interval x = eval(expr, bits);
    const mpq_class lo = x.lo_rational();
    const mpq_class hi = x.hi_rational();
    if (hi - lo >= mpq_class(1, 2)) continue;
    const mpz_class k = floor_of(lo + mpq_class(1, 2));
    if (k != floor_of(hi + mpq_class(1, 2))) continue;
    return {distance_to_nearest_integer(x), k};
  }
  throw PrecisionExhausted("nearest integer to " + expr.to_string() + " undecided at " +
                           std::to_string(schedule.cap_bits) +
                           " bits; the value may be a half-integer");
}

}  // namespace pellrep
