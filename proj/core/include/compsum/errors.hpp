#pragma once

#include <stdexcept>
#include <string>

namespace compsum {

/// A series operation required an invertible constant term and did not get one.
class NonUnitConstantTerm : public std::domain_error {
 public:
  explicit NonUnitConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// Substitution f(g) was requested with g(0) != 0.
class CompositionAtNonzeroPoint : public std::domain_error {
 public:
  explicit CompositionAtNonzeroPoint(const std::string& what) : std::domain_error(what) {}
};

/// exp/log/related operation called outside its constant-term domain.
class ConstantTermError : public std::domain_error {
 public:
  explicit ConstantTermError(const std::string& what) : std::domain_error(what) {}
};

/// An enumeration was requested past its size guard (2^(n-1) growth).
class SizeGuardError : public std::length_error {
 public:
  SizeGuardError(const std::string& what, long limit)
      : std::length_error(what + " (guard: " + std::to_string(limit) +
                          ", enumeration grows as 2^(n-1))"),
        limit_(limit) {}
  long limit() const noexcept { return limit_; }

 private:
  long limit_;
};

/// An index or mask argument fell outside its documented range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace compsum
