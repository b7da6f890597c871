#include "pellrep/sequences.hpp"

#include "pellrep/precision.hpp"

namespace pellrep {

std::string_view name(SequenceKind kind) {
  return kind == SequenceKind::Pell ? "pell" : "pell-lucas";
}

std::string_view symbol(SequenceKind kind) { return kind == SequenceKind::Pell ? "P" : "Q"; }

SequenceKind parse_sequence_kind(std::string_view text) {
  if (text == "pell" || text == "P") return SequenceKind::Pell;
  if (text == "pell-lucas" || text == "Q") return SequenceKind::PellLucas;
  throw InvalidArgument("unknown sequence '" + std::string(text) + "'");
}

namespace {

std::pair<mpz_class, mpz_class> seeds(SequenceKind kind) {
  if (kind == SequenceKind::Pell) return {mpz_class(0), mpz_class(1)};
  return {mpz_class(2), mpz_class(2)};
}

}  // namespace

SequenceTerm term(SequenceKind kind, unsigned long n) {
  auto [prev, cur] = seeds(kind);
  if (n == 0) return {kind, 0, prev};
  for (unsigned long i = 1; i < n; ++i) {
    mpz_class next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {kind, n, cur};
}

std::vector<SequenceTerm> terms_up_to(SequenceKind kind, unsigned long n_max) {
  std::vector<SequenceTerm> out;
  out.reserve(n_max + 1);
  auto [x0, x1] = seeds(kind);
  out.push_back({kind, 0, x0});
  if (n_max >= 1) out.push_back({kind, 1, x1});
  for (unsigned long n = 2; n <= n_max; ++n) {
    out.push_back({kind, n, 2 * out[n - 1].value + out[n - 2].value});
  }
  return out;
}

bool binet_check(SequenceKind kind, unsigned long n, unsigned long bits) {
  if (n == 0) throw InvalidArgument("binet_check requires n >= 1");
  const auto e = static_cast<long>(n);
  const RealExpr alpha_n = RealExpr::pow(RealExpr::alpha(), e);
  const RealExpr beta_n = RealExpr::pow(RealExpr::beta(), e);
  const RealExpr closed = kind == SequenceKind::Pell
                              ? (alpha_n - beta_n) / (RealExpr(2L) * RealExpr::sqrt_of(2))
                              : alpha_n + beta_n;
  return eval(closed, bits).contains(mpq_class(term(kind, n).value));
}

bool growth_bounds_hold(SequenceKind kind, unsigned long n, unsigned long bits) {
  if (n == 0) throw InvalidArgument("growth bounds are stated for n >= 1");
  const auto e = static_cast<long>(n);
  const mpz_class value = term(kind, n).value;
  const Interval lower = eval(RealExpr::pow(RealExpr::alpha(), e - 2), bits);
  if (compare(lower.hi(), value) > 0) return false;
  if (kind == SequenceKind::Pell) {
    const Interval upper = eval(RealExpr::pow(RealExpr::alpha(), e - 1), bits);
    return compare(upper.lo(), value) >= 0;
  }
  const Interval upper = eval(RealExpr::pow(RealExpr::alpha(), e + 1), bits);
  return compare(upper.lo(), value) > 0;
}

}  // namespace pellrep
