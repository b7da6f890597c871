#include "pellrep/bigfloat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace pellrep {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);  // same precision, exact
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const mpq_class& value, mpfr_prec_t precision,
                                 mpfr_rnd_t rounding) {
  BigFloat out(precision);
  mpfr_set_q(out.value_, value.get_mpq_t(), rounding);
  return out;
}

BigFloat BigFloat::from_integer(const mpz_class& value, mpfr_prec_t precision,
                                mpfr_rnd_t rounding) {
  BigFloat out(precision);
  mpfr_set_z(out.value_, value.get_mpz_t(), rounding);
  return out;
}

mpq_class BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("BigFloat::to_rational on non-finite value");
  if (mpfr_zero_p(value_)) return mpq_class(0);
  mpz_class mantissa;
  mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class out(mantissa);
  if (exponent > 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else if (exponent < 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  out.canonicalize();
  return out;
}

double BigFloat::to_double(mpfr_rnd_t rounding) const { return mpfr_get_d(value_, rounding); }

mpz_class BigFloat::floor() const {
  if (!is_finite()) throw std::domain_error("BigFloat::floor on non-finite value");
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

mpz_class BigFloat::ceil() const {
  if (!is_finite()) throw std::domain_error("BigFloat::ceil on non-finite value");
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDU);
  return out;
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rounding) const {
  char* raw = nullptr;
  std::string format = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "R*e";
  if (mpfr_asprintf(&raw, format.c_str(), rounding, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace pellrep
