#include "compsum/compositions.hpp"

#include <vector>

#include "doctest.h"

#include "compsum/errors.hpp"

using compsum::Composition;
using compsum::Integer;
using compsum::PartSet;

namespace {

std::vector<std::string> listed(int n) {
  std::vector<std::string> out;
  for (const auto& c : compsum::enumerate(n)) out.push_back(c.str());
  return out;
}

}  // namespace

TEST_SUITE("compositions") {

TEST_CASE("composition invariants") {
  const Composition c({2, 1, 3});
  CHECK(c.total() == 6);
  CHECK(c.length() == 3);
  CHECK(c.str() == "2+1+3");
  CHECK(c.parts_factorial() == Integer(2 * 1 * 6));
  CHECK(c.shifted_parts_factorial() == Integer(6 * 2 * 24));
  CHECK_THROWS_AS(Composition({2, 0, 1}), compsum::RangeError);
  CHECK_THROWS_AS(Composition({}), compsum::RangeError);
}

TEST_CASE("mask order for n = 3 matches the worked list") {
  CHECK(listed(3) == std::vector<std::string>{"3", "2+1", "1+2", "1+1+1"});
}

TEST_CASE("enumeration counts 2^(n-1) and round-trips through masks") {
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t count = 0;
    for (const auto& c : compsum::enumerate(n)) {
      CHECK(c.total() == n);
      CHECK(compsum::from_mask(n, c.mask()) == c);
      ++count;
    }
    CHECK(count == (std::uint64_t(1) << (n - 1)));
  }
  CHECK_THROWS_AS(compsum::enumerate(0), compsum::SizeGuardError);
  CHECK_THROWS_AS(compsum::enumerate(31), compsum::SizeGuardError);
  CHECK_THROWS_AS(compsum::from_mask(3, 4), compsum::RangeError);
  CHECK_THROWS_AS(compsum::from_mask(0, 0), compsum::RangeError);
}

TEST_CASE("part count is the binary digit sum plus one") {
  for (int n = 1; n <= 12; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask)
      CHECK(compsum::from_mask(n, mask).length() ==
            compsum::digit_sum_s2(mask) + 1);
}

TEST_CASE("part sets sort, deduplicate, and validate") {
  const PartSet parts({2, 1, 2});
  CHECK(parts.members() == std::vector<int>{1, 2});
  CHECK(parts.str() == "{1,2}");
  CHECK(parts.contains(2));
  CHECK_FALSE(parts.contains(3));
  CHECK_THROWS_AS(PartSet({}), compsum::RangeError);
  CHECK_THROWS_AS(PartSet({0, 1}), compsum::RangeError);
}

TEST_CASE("restricted enumeration is lexicographic and complete") {
  std::vector<std::string> got;
  for (const auto& c : compsum::enumerate_restricted(4, PartSet({1, 2})))
    got.push_back(c.str());
  CHECK(got == std::vector<std::string>{"1+1+1+1", "1+1+2", "1+2+1", "2+1+1", "2+2"});

  // No composition of 3 uses only part 2.
  auto empty = compsum::enumerate_restricted(3, PartSet({2}));
  CHECK(empty.begin() == empty.end());
  CHECK(compsum::count_restricted(3, PartSet({2})) == 0);

  for (int n = 1; n <= 12; ++n) {
    Integer count(0);
    for (const auto& c : compsum::enumerate_restricted(n, PartSet({1, 3, 4}))) {
      CHECK(c.total() == n);
      for (int k : c.parts()) CHECK(PartSet({1, 3, 4}).contains(k));
      ++count;
    }
    CHECK(count == compsum::count_restricted(n, PartSet({1, 3, 4})));
  }
}

TEST_CASE("restricted counts follow the recurrence") {
  // Parts {1,2} count compositions by Fibonacci numbers: F_5 = 8.
  CHECK(compsum::count_restricted(5, PartSet({1, 2})) == 8);
  const auto f = compsum::count_restricted_upto(20, PartSet({1, 2}));
  CHECK(f[0] == 1);
  CHECK(f[1] == 1);
  for (int n = 2; n <= 20; ++n)
    CHECK(f[static_cast<std::size_t>(n)] ==
          f[static_cast<std::size_t>(n) - 1] + f[static_cast<std::size_t>(n) - 2]);
  // Unrestricted parts reproduce the 2^(n-1) count.
  const auto all = compsum::count_restricted_upto(
      10, PartSet({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  for (int n = 1; n <= 10; ++n)
    CHECK(all[static_cast<std::size_t>(n)] == Integer(1) << (n - 1));
}

}  // TEST_SUITE
