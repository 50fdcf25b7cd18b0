#include "compsum/pitree.hpp"

namespace compsum {

std::uint64_t tree_row_mask(int n, std::uint64_t rank) {
  if (n < 1 || n > 64) throw RangeError("tree_row_mask: n out of range");
  if (n < 64 && rank >> (n - 1) != 0) throw RangeError("tree_row_mask: rank beyond row width");
  // Reading the P/I path from the root, the m-th letter settles mask bit
  // m-1 (P sets it) while rank orders paths lexicographically with P first,
  // so rank bit n-1-m is the letter's complement.
  std::uint64_t mask = 0;
  for (int j = 0; j < n - 1; ++j)
    if (((rank >> (n - 2 - j)) & 1) == 0) mask |= std::uint64_t(1) << j;
  return mask;
}

InputSequence<Rational> woon_input() {
  return {"woon", [](int n) {
            Rational g(Integer(1), factorial(static_cast<unsigned long>(n) + 1));
            return n % 2 == 1 ? g : -g;
          }};
}

InputSequence<Rational> indicator_input(const PartSet& parts) {
  return {"indicator" + parts.str(),
          [parts](int n) { return parts.contains(n) ? Rational(1) : Rational(0); }};
}

InputSequence<Rational> table_input(std::string name, std::vector<Rational> values) {
  auto table = std::make_shared<const std::vector<Rational>>(std::move(values));
  return {std::move(name), [table](int n) {
            if (n < 1 || static_cast<std::size_t>(n) > table->size())
              throw RangeError("table input asked beyond its last entry");
            return (*table)[static_cast<std::size_t>(n) - 1];
          }};
}

}  // namespace compsum
