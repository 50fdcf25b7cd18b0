#pragma once

#include <string>
#include <utility>

namespace compsum {

/// Outcome of one identity check over a range of n. When a check fails the
/// witness pins down the first mismatch (n, the paths compared, both values).
struct CheckResult {
  std::string identity;
  int n_lo = 0;
  int n_hi = 0;
  bool ok = true;
  std::string witness;

  static CheckResult pass(std::string identity, int n_lo, int n_hi) {
    return {std::move(identity), n_lo, n_hi, true, {}};
  }
  static CheckResult fail(std::string identity, int n_lo, int n_hi, std::string witness) {
    return {std::move(identity), n_lo, n_hi, false, std::move(witness)};
  }
};

}  // namespace compsum
