#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace pellrep {

// Owning wrapper around an mpfr_t. Arithmetic is done through the raw
// handle with an explicit rounding mode; this class only manages lifetime
// and the conversions the interval code needs.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const mpq_class& value, mpfr_prec_t precision,
                                mpfr_rnd_t rounding);
  static BigFloat from_integer(const mpz_class& value, mpfr_prec_t precision,
                               mpfr_rnd_t rounding);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  // Exact value of a finite dyadic number.
  mpq_class to_rational() const;
  double to_double(mpfr_rnd_t rounding = MPFR_RNDN) const;
  mpz_class floor() const;
  mpz_class ceil() const;

  // Decimal rendering with `digits` significant digits in the given
  // rounding direction, e.g. "1.2345e+30".
  std::string to_string(int digits, mpfr_rnd_t rounding = MPFR_RNDN) const;

  friend int compare(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.value_, b.value_);
  }
  friend int compare(const BigFloat& a, const mpq_class& b) {
    return mpfr_cmp_q(a.value_, b.get_mpq_t());
  }
  friend int compare(const BigFloat& a, const mpz_class& b) {
    return mpfr_cmp_z(a.value_, b.get_mpz_t());
  }

 private:
  mpfr_t value_;
};

}  // namespace pellrep
