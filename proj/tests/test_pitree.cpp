#include "compsum/pitree.hpp"

#include <string>
#include <vector>

#include "doctest.h"

#include "compsum/compositions.hpp"
#include "compsum/errors.hpp"
#include "compsum/rational.hpp"
#include "compsum/sequences.hpp"

using compsum::PartSet;
using compsum::Rational;

TEST_SUITE("pitree") {

TEST_CASE("row 3 of the Woon tree in path order") {
  const auto row = compsum::build_row(compsum::woon_input(), 3);
  REQUIRE(row.size() == 4);
  CHECK(row[0].multi_index.str() == "1+1+1");
  CHECK(row[1].multi_index.str() == "2+1");
  CHECK(row[2].multi_index.str() == "1+2");
  CHECK(row[3].multi_index.str() == "3");
  CHECK(row[0].value == Rational(1, 8));
  CHECK(row[1].value == Rational(-1, 12));
  CHECK(row[2].value == Rational(-1, 12));
  CHECK(row[3].value == Rational(1, 24));
}

TEST_CASE("row masks visit every composition once") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<bool> seen(std::size_t(1) << (n - 1), false);
    for (std::uint64_t rank = 0; rank < (std::uint64_t(1) << (n - 1)); ++rank) {
      const std::uint64_t mask = compsum::tree_row_mask(n, rank);
      REQUIRE(mask < seen.size());
      CHECK_FALSE(seen[mask]);
      seen[mask] = true;
    }
  }
}

TEST_CASE("woon row sums reproduce the Bernoulli column") {
  const auto sums = compsum::row_sums(compsum::woon_input(), 8);
  CHECK(sums[0] == Rational(1));
  CHECK(sums[1] == Rational(1, 2));
  CHECK(sums[2] == Rational(1, 12));
  CHECK(sums[3] == Rational(0));
  CHECK(sums[4] == Rational(-1, 720));
  const auto b = compsum::bernoulli_numbers(8);
  for (int n = 1; n <= 8; ++n) {
    Rational want = b[static_cast<std::size_t>(n)] /
                    Rational(compsum::factorial(static_cast<unsigned long>(n)));
    if (n % 2 == 1) want = -want;
    CHECK(sums[static_cast<std::size_t>(n)] == want);
  }
}

TEST_CASE("indicator input counts restricted compositions") {
  const auto sums = compsum::row_sums(compsum::indicator_input(PartSet({1, 2})), 10);
  const auto counts = compsum::count_restricted_upto(10, PartSet({1, 2}));
  for (int n = 0; n <= 10; ++n)
    CHECK(sums[static_cast<std::size_t>(n)] ==
          Rational(counts[static_cast<std::size_t>(n)]));
}

TEST_CASE("row sum recurrence equals direct node summation") {
  const auto woon = compsum::woon_input();
  const auto sums = compsum::row_sums(woon, 12);
  for (int n = 1; n <= 12; ++n) {
    Rational direct(0);
    compsum::for_each_row_node(woon, n, [&direct](const compsum::PiNode<Rational>& node) {
      direct += node.value;
    });
    CHECK(direct == sums[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("table input serves values 1..len and guards past the end") {
  const auto t = compsum::table_input("t", {Rational(5), Rational(-7)});
  CHECK(t.gen(1) == Rational(5));
  CHECK(t.gen(2) == Rational(-7));
  CHECK_THROWS_AS(t.gen(3), compsum::RangeError);
  CHECK_THROWS_AS(t.gen(0), compsum::RangeError);
}

TEST_CASE("export_dot renders the P and I wiring") {
  const std::string dot = compsum::export_dot(compsum::woon_input(), 2);
  CHECK(dot.find("digraph pi_tree") != std::string::npos);
  CHECK(dot.find("\"R\" -> \"RP\" [label=\"P\"]") != std::string::npos);
  CHECK(dot.find("\"R\" -> \"RI\" [label=\"I\"]") != std::string::npos);
  CHECK(dot.find("(1,1) = 1/4") != std::string::npos);
  CHECK(dot.find("(2) = -1/6") != std::string::npos);

  const std::string tuples =
      compsum::export_dot(compsum::woon_input(), 2, compsum::DotLabel::kMultiIndex);
  CHECK(tuples.find("label=\"(2)\"") != std::string::npos);
  CHECK(tuples.find(" = ") == std::string::npos);

  CHECK_THROWS_AS(compsum::export_dot(compsum::woon_input(), 9), compsum::SizeGuardError);
  CHECK_THROWS_AS(compsum::export_dot(compsum::woon_input(), 0), compsum::SizeGuardError);
}

TEST_CASE("guards on row enumeration") {
  CHECK_THROWS_AS(compsum::row_sums(compsum::woon_input(), -1), compsum::RangeError);
  CHECK_THROWS_AS(compsum::build_row(compsum::woon_input(), 25), compsum::SizeGuardError);
  CHECK_THROWS_AS(compsum::build_row(compsum::woon_input(), 0), compsum::SizeGuardError);
}

}  // TEST_SUITE
