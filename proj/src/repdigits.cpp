#include "pellrep/repdigits.hpp"

#include "pellrep/errors.hpp"

#include <algorithm>

namespace pellrep {
namespace {

void require_base(int base) {
  if (base < 2 || base > 10) {
    throw InvalidArgument("base must lie in [2, 10], got " + std::to_string(base));
  }
}

}  // namespace

ConcatRepdigit ConcatRepdigit::make(int base, int d1, std::uint64_t l1, int d2,
                                    std::uint64_t l2) {
  ConcatRepdigit r{base, d1, l1, d2, l2};
  if (!r.valid()) {
    throw InvalidArgument("invalid concatenation (b=" + std::to_string(base) +
                          ", d1=" + std::to_string(d1) + ", l1=" + std::to_string(l1) +
                          ", d2=" + std::to_string(d2) + ", l2=" + std::to_string(l2) + ")");
  }
  return r;
}

bool ConcatRepdigit::valid() const {
  return base >= 2 && base <= 10 && d1 >= 1 && d1 <= base - 1 && d2 >= 0 && d2 <= base - 1 &&
         d1 != d2 && l1 >= 1 && l2 >= 1;
}

mpz_class ConcatRepdigit::value() const {
  if (!valid()) throw InvalidArgument("value() of an invalid concatenation");
  mpz_class b_l2, b_total;
  mpz_ui_pow_ui(b_l2.get_mpz_t(), static_cast<unsigned long>(base), l2);
  mpz_ui_pow_ui(b_total.get_mpz_t(), static_cast<unsigned long>(base), l1 + l2);
  mpz_class numerator = d1 * b_total - (d1 - d2) * b_l2 - d2;
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(base - 1));
  return out;
}

std::string ConcatRepdigit::digit_string() const {
  return std::string(l1, static_cast<char>('0' + d1)) + std::string(l2, static_cast<char>('0' + d2));
}

std::vector<int> digits(const mpz_class& n, int base) {
  require_base(base);
  if (sgn(n) < 0) throw InvalidArgument("digits() of a negative number");
  if (sgn(n) == 0) return {0};
  std::vector<int> out;
  mpz_class rest = n;
  while (sgn(rest) > 0) {
    out.push_back(static_cast<int>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                                 static_cast<unsigned long>(base))));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<ConcatRepdigit> decompose(const mpz_class& n, int base) {
  require_base(base);
  if (sgn(n) < 1) throw InvalidArgument("decompose() requires n >= 1");
  const std::vector<int> ds = digits(n, base);
  const auto split = std::find_if(ds.begin(), ds.end(), [&](int d) { return d != ds.front(); });
  if (split == ds.end()) return std::nullopt;
  if (std::any_of(split, ds.end(), [&](int d) { return d != *split; })) return std::nullopt;
  const auto l1 = static_cast<std::uint64_t>(split - ds.begin());
  const auto l2 = static_cast<std::uint64_t>(ds.end() - split);
  return ConcatRepdigit{base, ds.front(), l1, *split, l2};
}

}  // namespace pellrep
