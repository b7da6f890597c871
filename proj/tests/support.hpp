#pragma once

// Helpers shared by the unit tests. The reference values here are computed
// with plain MPFR calls at very high precision and never go through
// Interval or RealExpr, so they are independent of the code under test.

#include "pellrep/precision.hpp"

#include <mpfr.h>

#include <gmpxx.h>

#include <random>
#include <string>

namespace testing {

constexpr mpfr_prec_t kReferenceBits = 34000;  // a little over 10^4 decimal digits

class Ref {
 public:
  Ref() { mpfr_init2(v_, kReferenceBits); }
  Ref(const Ref& o) {
    mpfr_init2(v_, kReferenceBits);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Ref& operator=(const Ref& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Ref() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

inline Ref ref_sqrt(unsigned long n) {
  Ref r;
  mpfr_sqrt_ui(r.get(), n, MPFR_RNDN);
  return r;
}

inline Ref ref_alpha() {
  Ref r = ref_sqrt(2);
  mpfr_add_ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

inline Ref ref_log(unsigned long n) {
  Ref r;
  mpfr_set_ui(r.get(), n, MPFR_RNDN);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return r;
}

// log(b) / log(1 + sqrt 2)
inline Ref ref_tau(unsigned long b) {
  Ref a = ref_alpha();
  mpfr_log(a.get(), a.get(), MPFR_RNDN);
  Ref r = ref_log(b);
  mpfr_div(r.get(), r.get(), a.get(), MPFR_RNDN);
  return r;
}

// Whether x lies in the interval, allowing for the reference's own error of
// about 2^-33990 relative.
inline bool encloses(const pellrep::Interval& iv, const Ref& x) {
  return mpfr_cmp(iv.lo().get(), x.get()) <= 0 && mpfr_cmp(iv.hi().get(), x.get()) >= 0;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline mpz_class pow_ui(unsigned long b, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), b, e);
  return out;
}

// Decimal literal with exponent, e.g. dec("1.17e30").
inline mpq_class dec(const std::string& text) { return *pellrep::parse_expr(text).exact_value(); }

}  // namespace testing
