#include "pellrep/repdigits.hpp"
#include "pellrep/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace pellrep;

namespace {

// Run-length view of n in base b, built with machine integers.
std::vector<std::pair<int, int>> runs(unsigned long n, int b) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + n % b));
    n /= b;
  } while (n > 0);
  std::vector<std::pair<int, int>> out;
  for (char c : s) {
    if (out.empty() || out.back().first != c - '0') out.push_back({c - '0', 0});
    ++out.back().second;
  }
  return out;
}

}  // namespace

TEST_CASE("value examples") {
  CHECK(ConcatRepdigit::make(9, 7, 3, 8, 1).value() == 5741);
  CHECK(ConcatRepdigit::make(2, 1, 1, 0, 1).value() == 2);
  for (int b = 2; b <= 10; ++b)
    for (int d1 = 1; d1 < b; ++d1)
      for (int d2 = 0; d2 < b; ++d2)
        if (d1 != d2) CHECK(ConcatRepdigit::make(b, d1, 1, d2, 1).value() == d1 * b + d2);
}

TEST_CASE("decompose examples") {
  CHECK(decompose(5741, 9) == ConcatRepdigit::make(9, 7, 3, 8, 1));
  CHECK_FALSE(decompose(111, 10).has_value());
  CHECK(decompose(169, 4) == ConcatRepdigit::make(4, 2, 3, 1, 1));
  CHECK(decompose(100, 10) == ConcatRepdigit::make(10, 1, 1, 0, 2));
  CHECK_THROWS_AS(decompose(0, 10), InvalidArgument);
  CHECK_FALSE(decompose(7, 10).has_value());
  CHECK_FALSE(decompose(121, 10).has_value());
}

TEST_CASE("digits examples") {
  CHECK(digits(408, 7) == std::vector<int>{1, 1, 2, 2});
  CHECK(digits(0, 2) == std::vector<int>{0});
  CHECK(digits(82, 8) == std::vector<int>{1, 2, 2});
}

TEST_CASE("make rejects invalid digits") {
  CHECK_THROWS_AS(ConcatRepdigit::make(1, 1, 1, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(11, 1, 1, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(10, 0, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(10, 3, 1, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(10, 3, 0, 2, 1), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(10, 3, 1, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(ConcatRepdigit::make(10, 3, 1, 10, 1), InvalidArgument);
  CHECK_THROWS_AS(digits(5, 1), InvalidArgument);
  CHECK_THROWS_AS(digits(-5, 10), InvalidArgument);
}

TEST_CASE("value and decompose round trip, with the digit count") {
  for (int b = 2; b <= 10; ++b) {
    for (int d1 = 1; d1 < b; ++d1) {
      for (int d2 = 0; d2 < b; ++d2) {
        if (d1 == d2) continue;
        for (std::uint64_t l1 = 1; l1 < 40; ++l1) {
          for (std::uint64_t l2 = 1; l1 + l2 <= 40; ++l2) {
            ConcatRepdigit r = ConcatRepdigit::make(b, d1, l1, d2, l2);
            mpz_class v = r.value();
            CHECK(decompose(v, b) == r);
            // b^(L-1) <= v < b^L with L = l1 + l2
            CHECK(v >= testing::pow_ui(b, l1 + l2 - 1));
            CHECK(v < testing::pow_ui(b, l1 + l2));
            CHECK(r.digit_string().size() == l1 + l2);
          }
        }
      }
    }
  }
}

TEST_CASE("decompose agrees with a run-length oracle below 10^6") {
  for (int b = 2; b <= 10; ++b) {
    for (unsigned long n = 1; n < 1000000; ++n) {
      auto rs = runs(n, b);
      auto got = decompose(mpz_class(n), b);
      if (rs.size() == 2) {
        REQUIRE(got.has_value());
        CHECK(got->d1 == rs[0].first);
        CHECK(got->l1 == static_cast<std::uint64_t>(rs[0].second));
        CHECK(got->d2 == rs[1].first);
        CHECK(got->l2 == static_cast<std::uint64_t>(rs[1].second));
      } else {
        CHECK_FALSE(got.has_value());
      }
    }
  }
}

TEST_CASE("ordering is lexicographic on (base, d1, l1, d2, l2)") {
  CHECK(ConcatRepdigit::make(2, 1, 1, 0, 1) < ConcatRepdigit::make(3, 1, 1, 0, 1));
  CHECK(ConcatRepdigit::make(10, 1, 2, 0, 1) < ConcatRepdigit::make(10, 2, 1, 0, 1));
  CHECK(ConcatRepdigit::make(9, 7, 3, 8, 1).digit_string() == "7778");
}
