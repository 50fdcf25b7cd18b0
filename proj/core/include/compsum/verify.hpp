#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compsum/check.hpp"

namespace compsum {

/// Identity suites. Every check compares two or more independent
/// realizations of the same exact numbers: generating function against
/// direct enumeration, closed form against composition sum, and so on.
/// max_n bounds the series orders; paths with their own enumeration
/// guards are clamped internally.
std::vector<CheckResult> verify_compsum(int max_n);
std::vector<CheckResult> verify_pitree(int max_n);
std::vector<CheckResult> verify_sequences(int max_n);
std::vector<CheckResult> verify_iterated(int max_n);

/// Dispatch by suite name; "all" runs the four suites in the order above.
/// Throws RangeError for an unknown name.
std::vector<CheckResult> verify_suite(std::string_view suite, int max_n);

const std::vector<std::string>& verify_suite_names();

}  // namespace compsum
