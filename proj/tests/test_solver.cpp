#include "pellrep/report.hpp"
#include "pellrep/solver.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace pellrep;

namespace {

std::set<testing::OracleHit> as_hits(const std::vector<Solution>& sols) {
  std::set<testing::OracleHit> out;
  for (const Solution& s : sols) {
    out.insert({s.n, s.repr.base, s.repr.d1, s.repr.l1, s.repr.d2, s.repr.l2});
  }
  return out;
}

const SolverReport& report(SequenceKind kind) {
  static const SolverReport pell = solve(SequenceKind::Pell, 2, 10);
  static const SolverReport lucas = solve(SequenceKind::PellLucas, 2, 10);
  return kind == SequenceKind::Pell ? pell : lucas;
}

}  // namespace

TEST_CASE("search_exhaustive agrees with the pattern enumerator") {
  for (SequenceKind kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
    CHECK(as_hits(search_exhaustive(kind, 30, 2, 10)) == testing::pattern_enumerate(kind, 30));
    CHECK(as_hits(search_exhaustive(kind, 300, 2, 10)) == testing::pattern_enumerate(kind, 300));
  }
}

TEST_CASE("search_exhaustive examples") {
  CHECK(search_exhaustive(SequenceKind::Pell, 1, 2, 10).empty());

  std::set<long> values;
  for (const Solution& s : search_exhaustive(SequenceKind::PellLucas, 300, 2, 10)) {
    values.insert(s.value.get_si());
  }
  CHECK(values == std::set<long>{2, 6, 14, 34, 82});

  auto sols = search_exhaustive(SequenceKind::PellLucas, 1, 2, 10);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].n == 0);
  CHECK(sols[1].n == 1);
  CHECK(sols[0].repr == ConcatRepdigit::make(2, 1, 1, 0, 1));

  // 12 = 20 in base 6 is a two-block number
  auto pell = search_exhaustive(SequenceKind::Pell, 4, 6, 6);
  REQUIRE(pell.size() == 1);
  CHECK(pell[0].value == 12);
  CHECK(pell[0].repr == ConcatRepdigit::make(6, 2, 1, 0, 1));
}

TEST_CASE("solutions are sorted by n then base and every value matches its representation") {
  for (SequenceKind kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
    const auto& sols = report(kind).solutions;
    CHECK(std::is_sorted(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) {
      return std::tie(a.n, a.repr.base) < std::tie(b.n, b.repr.base);
    }));
    for (const Solution& s : sols) {
      CHECK(s.repr.value() == s.value);
      CHECK(term(kind, s.n).value == s.value);
    }
  }
}

TEST_CASE("Pell numbers") {
  const SolverReport& r = report(SequenceKind::Pell);
  std::map<long, int> per_value;
  for (const Solution& s : r.solutions) ++per_value[s.value.get_si()];
  CHECK(per_value == std::map<long, int>{{2, 1}, {5, 2}, {12, 8}, {29, 5}, {70, 1}, {169, 3}, {408, 1}, {5741, 1}});
  CHECK(r.solutions.back().value == 5741);
  CHECK(r.solutions.back().repr == ConcatRepdigit::make(9, 7, 3, 8, 1));
  for (const SearchBox& box : r.search_box) CHECK(box.n_max <= 110);
}

TEST_CASE("Pell-Lucas numbers") {
  const SolverReport& r = report(SequenceKind::PellLucas);
  std::map<long, int> per_value;
  for (const Solution& s : r.solutions) ++per_value[s.value.get_si()];
  CHECK(per_value == std::map<long, int>{{2, 2}, {6, 4}, {14, 8}, {34, 6}, {82, 2}});
  CHECK(r.solutions.back().value == 82);
  for (const SearchBox& box : r.search_box) CHECK(box.n_max <= 300);
}

TEST_CASE("a single base") {
  SolverReport r = solve(SequenceKind::PellLucas, 10, 10);
  std::vector<long> values;
  for (const Solution& s : r.solutions) {
    CHECK(s.repr.base == 10);
    values.push_back(s.value.get_si());
  }
  CHECK(values == std::vector<long>{14, 34, 82});
  CHECK(r.family_bounds.size() == 2);
}

TEST_CASE("the reduced bounds dominate every solution and close below the threshold") {
  for (SequenceKind kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
    const SolverReport& r = report(kind);
    const unsigned long threshold = r.ledger.constants.n_threshold;
    for (const FamilyBound& f : r.family_bounds) {
      if (f.stage == Stage::NStage) CHECK(f.bound < static_cast<long>(threshold));
      for (const Solution& s : r.solutions) {
        if (s.repr.base != f.base) continue;
        if (f.stage == Stage::L1Stage) CHECK(static_cast<long>(s.repr.l1) <= f.bound);
      }
    }
    for (const SearchBox& box : r.search_box) {
      for (const Solution& s : r.solutions) {
        if (s.repr.base != box.base) continue;
        CHECK(s.n <= box.n_max);
        CHECK(static_cast<long>(s.repr.l1) <= box.l1_max);
        CHECK(static_cast<long>(s.repr.l2) <= box.l2_max);
      }
    }
  }
}

TEST_CASE("solving is deterministic") {
  SolverReport again = solve(SequenceKind::Pell, 2, 10);
  CHECK(render_solve(again, OutputFormat::Json) == render_solve(report(SequenceKind::Pell), OutputFormat::Json));
  CHECK(render_solve(again, OutputFormat::Csv) == render_solve(report(SequenceKind::Pell), OutputFormat::Csv));
}

TEST_CASE("base range is validated") {
  CHECK_THROWS_AS(solve(SequenceKind::Pell, 1, 10), InvalidArgument);
  CHECK_THROWS_AS(solve(SequenceKind::Pell, 5, 4), InvalidArgument);
  CHECK_THROWS_AS(search_exhaustive(SequenceKind::Pell, 10, 2, 11), InvalidArgument);
}
