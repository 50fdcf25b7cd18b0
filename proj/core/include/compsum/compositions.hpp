#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

/// Full enumeration of C(n) is guarded here; 2^(n-1) terms above this is
/// never useful at the desk scale this library targets.
inline constexpr int kMaxEnumerationN = 30;

/// Ordered list of positive integer parts (k1,...,km) with k1+...+km = n.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  const std::vector<int>& parts() const { return parts_; }

  /// pi! = k1! ... km!
  Integer parts_factorial() const;
  /// (pi+1)! = (k1+1)! ... (km+1)!
  Integer shifted_parts_factorial() const;

  /// Inverse of from_mask: the bar mask encoding this composition.
  std::uint64_t mask() const;

  /// "k1+k2+...+km"
  std::string str() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int total_;
};

/// Decodes a bar mask: n dots leave n-1 gaps, and bit i of the mask places a
/// bar in gap i counted from the right. The part count is always
/// digit_sum_s2(mask) + 1, and mask order starts at (n) for mask 0.
Composition from_mask(int n, std::uint64_t mask);

/// Number of ones in the binary expansion of k.
int digit_sum_s2(std::uint64_t k);

/// Lazy mask-order range over all 2^(n-1) compositions of n.
class CompositionRange {
 public:
  explicit CompositionRange(int n);

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Composition operator*() const { return from_mask(n_, mask_); }
    iterator& operator++() { ++mask_; return *this; }
    iterator operator++(int) { iterator t = *this; ++mask_; return t; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    int n_;
    std::uint64_t mask_;
  };

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, size()); }
  std::uint64_t size() const { return std::uint64_t(1) << (n_ - 1); }
  int n() const { return n_; }

 private:
  int n_;
};

/// All compositions of n in mask order; throws SizeGuardError outside [1, 30].
CompositionRange enumerate(int n);

/// Finite non-empty set of allowed parts, kept sorted ascending.
class PartSet {
 public:
  explicit PartSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  bool contains(int j) const;
  std::string str() const;  // "{1,2}"

 private:
  std::vector<int> members_;
};

/// Lazy lexicographic range over the compositions of n with parts in J.
/// Empty when no such composition exists.
class RestrictedCompositionRange {
 public:
  RestrictedCompositionRange(int n, PartSet parts);

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() : done_(true) {}
    iterator(int n, std::shared_ptr<const std::vector<int>> members,
             std::shared_ptr<const std::vector<char>> reachable);
    Composition operator*() const { return Composition(current_); }
    iterator& operator++();
    iterator operator++(int) { iterator t = *this; ++(*this); return t; }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.current_ == b.current_;
    }

   private:
    void fill_minimal(int remaining);

    bool done_ = false;
    int n_ = 0;
    std::shared_ptr<const std::vector<int>> members_;
    std::shared_ptr<const std::vector<char>> reachable_;
    std::vector<int> current_;
  };

  iterator begin() const;
  iterator end() const { return iterator(); }

 private:
  int n_;
  std::shared_ptr<const std::vector<int>> members_;
  std::shared_ptr<const std::vector<char>> reachable_;
};

RestrictedCompositionRange enumerate_restricted(int n, const PartSet& parts);

/// Count of compositions of n with parts in J, by the linear recurrence
/// x_n = sum_{j in J} x_{n-j} with seed x_0 = 1. Linear time, no guard.
Integer count_restricted(int n, const PartSet& parts);

/// The counts x_0..x_N as one table.
std::vector<Integer> count_restricted_upto(int max_n, const PartSet& parts);

}  // namespace compsum
