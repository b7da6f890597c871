#include "pellrep/precision.hpp"

#include <algorithm>
#include <sstream>

namespace pellrep {
namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.bits(), b.bits());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Smallest and largest of the four endpoint combinations, each rounded
// outward. Used by multiplication and division.
Interval corner_hull(const Interval& a, const Interval& b, BinaryOp op) {
  const mpfr_prec_t prec = joint_precision(a, b);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  BigFloat lo(prec), hi(prec), tmp(prec);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      op(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || compare(tmp, lo) < 0) lo = tmp;
      op(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || compare(tmp, hi) > 0) hi = tmp;
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

mpz_class round_half_up(const mpq_class& x) {
  mpq_class shifted = x + mpq_class(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

}  // namespace

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!lo_.is_finite() || !hi_.is_finite()) {
    throw PrecisionExhausted("interval endpoint overflowed or is NaN");
  }
  if (compare(lo_, hi_) > 0) throw std::logic_error("Interval: lo > hi");
}

Interval Interval::point(const mpq_class& value, mpfr_prec_t precision) {
  return Interval(BigFloat::from_rational(value, precision, MPFR_RNDD),
                  BigFloat::from_rational(value, precision, MPFR_RNDU));
}

Interval Interval::point(const mpz_class& value, mpfr_prec_t precision) {
  return Interval(BigFloat::from_integer(value, precision, MPFR_RNDD),
                  BigFloat::from_integer(value, precision, MPFR_RNDU));
}

bool Interval::contains(const mpq_class& value) const {
  return compare(lo_, value) <= 0 && compare(hi_, value) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return compare(lo_, inner.lo_) <= 0 && compare(hi_, inner.hi_) >= 0;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

BigFloat Interval::width() const {
  BigFloat out(bits());
  mpfr_sub(out.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

double Interval::midpoint() const {
  BigFloat mid(bits() + 1);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_double();
}

std::string Interval::to_string(int digits) const {
  std::ostringstream os;
  os << '[' << lo_.to_string(digits, MPFR_RNDD) << ", " << hi_.to_string(digits, MPFR_RNDU)
     << ']';
  return os.str();
}

Interval operator+(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = joint_precision(a, b);
  BigFloat lo(prec), hi(prec);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = joint_precision(a, b);
  BigFloat lo(prec), hi(prec);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a) {
  BigFloat lo(a.bits()), hi(a.bits());
  mpfr_neg(lo.get(), a.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) { return corner_hull(a, b, &mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw DivisionByIntervalContainingZero("division by an interval containing zero: " +
                                           b.to_string(10));
  }
  return corner_hull(a, b, &mpfr_div);
}

Interval operator*(const Interval& a, const mpz_class& k) {
  BigFloat lo(a.bits()), hi(a.bits());
  if (sgn(k) >= 0) {
    mpfr_mul_z(lo.get(), a.lo().get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), a.hi().get(), k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(lo.get(), a.hi().get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), a.lo().get(), k.get_mpz_t(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  BigFloat lo = compare(a.lo(), b.lo()) <= 0 ? a.lo() : b.lo();
  BigFloat hi = compare(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi();
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw InvalidArgument("sqrt of an interval reaching below zero");
  BigFloat lo(x.bits()), hi(x.bits());
  mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) {
    throw LogOfIntervalTouchingZero("log of an interval touching zero: " + x.to_string(10));
  }
  BigFloat lo(x.bits()), hi(x.bits());
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  BigFloat hi(x.bits());
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  if (compare(x.hi(), hi) > 0) hi = x.hi();
  return Interval(BigFloat(x.bits()), std::move(hi));
}

Interval pow(const Interval& x, long exponent) {
  if (exponent == 0) return Interval::point(mpz_class(1), x.bits());
  if (exponent < 0) return Interval::point(mpz_class(1), x.bits()) / pow(x, -exponent);
  const auto e = static_cast<unsigned long>(exponent);
  // x^e is monotone on [0, inf) and, for odd e, on the whole line.
  const Interval base = (e % 2 == 0) ? abs(x) : x;
  BigFloat lo(x.bits()), hi(x.bits());
  mpfr_pow_ui(lo.get(), base.lo().get(), e, MPFR_RNDD);
  mpfr_pow_ui(hi.get(), base.hi().get(), e, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval distance_to_nearest_integer(const Interval& x) {
  const mpq_class lo = x.lo_rational();
  const mpq_class hi = x.hi_rational();
  if (hi - lo >= mpq_class(1, 2)) {
    throw PrecisionExhausted("interval too wide to bound the distance to the nearest integer");
  }
  const mpz_class k_lo = round_half_up(lo);
  const mpz_class k_hi = round_half_up(hi);
  const mpfr_prec_t prec = x.bits();
  if (k_lo == k_hi) {
    mpq_class d_lo = lo - k_lo;
    mpq_class d_hi = hi - k_lo;
    if (sgn(d_lo) >= 0) {
      return Interval(BigFloat::from_rational(d_lo, prec, MPFR_RNDD),
                      BigFloat::from_rational(d_hi, prec, MPFR_RNDU));
    }
    if (sgn(d_hi) <= 0) {
      return Interval(BigFloat::from_rational(-d_hi, prec, MPFR_RNDD),
                      BigFloat::from_rational(-d_lo, prec, MPFR_RNDU));
    }
    const mpq_class far = std::max(mpq_class(-d_lo), d_hi);
    return Interval(BigFloat(prec), BigFloat::from_rational(far, prec, MPFR_RNDU));
  }
  // The interval straddles a half-integer, where the distance peaks at 1/2.
  const mpq_class near = std::min(mpq_class(lo - k_lo), mpq_class(k_hi - hi));
  return Interval(BigFloat::from_rational(near, prec, MPFR_RNDD),
                  BigFloat::from_rational(mpq_class(1, 2), prec, MPFR_RNDU));
}

}  // namespace pellrep
