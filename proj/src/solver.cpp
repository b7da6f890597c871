#include "pellrep/solver.hpp"

#include <algorithm>
#include <string>

namespace pellrep {
namespace {

void check_bases(int base_min, int base_max) {
  if (base_min < 2 || base_max > 10 || base_min > base_max) {
    throw InvalidArgument("bases must satisfy 2 <= base_min <= base_max <= 10");
  }
}

}  // namespace

std::vector<Solution> search_exhaustive(SequenceKind kind, unsigned long n_max, int base_min,
                                        int base_max) {
  check_bases(base_min, base_max);
  std::vector<Solution> out;
  for (const SequenceTerm& t : terms_up_to(kind, n_max)) {
    if (t.value < 1) continue;
    for (int b = base_min; b <= base_max; ++b) {
      if (auto r = decompose(t.value, b)) out.push_back({kind, t.n, t.value, *r});
    }
  }
  return out;
}

SolverReport solve(SequenceKind kind, int base_min, int base_max,
                   const PrecisionSchedule& schedule) {
  check_bases(base_min, base_max);
  SolverReport report{kind, base_min, base_max, derive_initial_bounds(kind), {}, {}, {}};
  const FormConstants& k = report.ledger.constants;
  const auto threshold = static_cast<long>(k.n_threshold);

  for (int b = base_min; b <= base_max; ++b) {
    FamilyBound l1 = reduce_l1(kind, b, report.ledger, schedule);
    FamilyBound n = reduce_n(kind, b, l1.bound, report.ledger, schedule);
    if (n.bound >= threshold) {
      throw ReductionInsufficient(std::string(name(kind)) + ", base " + std::to_string(b) +
                                  ": reduced bound n <= " + std::to_string(n.bound) +
                                  " does not contradict n > " + std::to_string(threshold));
    }
    // (l1 + l2)·log b < n·log α + slack gives the l2 range of the search.
    const unsigned long n_box = k.n_threshold;
    const RealExpr l2_expr = (RealExpr(static_cast<long>(n_box)) * log(RealExpr::alpha()) +
                              RealExpr(k.log_slack)) /
                             log(RealExpr(static_cast<long>(b)));
    const long l2_max = eval(l2_expr, 256).hi().floor().get_si();
    report.search_box.push_back({b, n_box, std::max<long>(l1.bound, 1), l2_max});
    report.family_bounds.push_back(std::move(l1));
    report.family_bounds.push_back(std::move(n));
  }

  report.solutions = search_exhaustive(kind, k.n_threshold, base_min, base_max);
  for (const Solution& s : report.solutions) {
    const SearchBox& box = report.search_box[static_cast<std::size_t>(s.repr.base - base_min)];
    const bool inside = s.n <= box.n_max && static_cast<long>(s.repr.l1) <= box.l1_max &&
                        static_cast<long>(s.repr.l2) <= box.l2_max;
    if (!inside) {
      throw std::logic_error("solution " + s.value.get_str() + " lies outside the search box");
    }
  }
  return report;
}

}  // namespace pellrep
