#include "compsum/verify.hpp"

#include <string>
#include <vector>

#include "doctest.h"

#include "compsum/errors.hpp"

namespace {

int count_failures(const std::vector<compsum::CheckResult>& checks) {
  int bad = 0;
  for (const auto& c : checks)
    if (!c.ok) ++bad;
  return bad;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("each suite runs its full battery and passes") {
  const auto compsum_checks = compsum::verify_compsum(8);
  const auto pitree_checks = compsum::verify_pitree(8);
  const auto sequence_checks = compsum::verify_sequences(8);
  const auto iterated_checks = compsum::verify_iterated(8);

  CHECK(compsum_checks.size() == 12);
  CHECK(pitree_checks.size() == 4);
  CHECK(sequence_checks.size() == 9);
  CHECK(iterated_checks.size() == 4);

  CHECK(count_failures(compsum_checks) == 0);
  CHECK(count_failures(pitree_checks) == 0);
  CHECK(count_failures(sequence_checks) == 0);
  CHECK(count_failures(iterated_checks) == 0);

  for (const auto& c : compsum_checks) {
    CHECK(c.n_lo <= c.n_hi);
    CHECK(c.witness.empty());
  }
}

TEST_CASE("the all suite is the four batteries in order") {
  const auto all = compsum::verify_suite("all", 8);
  REQUIRE(all.size() == 29);
  CHECK(count_failures(all) == 0);

  std::vector<compsum::CheckResult> glued;
  for (const char* name : {"compsum", "pitree", "sequences", "iterated"})
    for (auto& c : compsum::verify_suite(name, 8)) glued.push_back(std::move(c));
  REQUIRE(glued.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].identity == glued[i].identity);
    CHECK(all[i].ok == glued[i].ok);
  }
}

TEST_CASE("suite names and bad arguments") {
  const auto names = compsum::verify_suite_names();
  const std::vector<std::string> want{"compsum", "pitree", "sequences", "iterated", "all"};
  CHECK(std::vector<std::string>(names.begin(), names.end()) == want);

  CHECK_THROWS_AS(compsum::verify_suite("nope", 8), compsum::RangeError);
  CHECK_THROWS_AS(compsum::verify_compsum(0), compsum::RangeError);
}

}  // TEST_SUITE
