#include "compsum/compositions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "compsum/errors.hpp"

namespace compsum {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), total_(0) {
  if (parts_.empty()) throw RangeError("composition needs at least one part");
  for (int k : parts_) {
    if (k < 1) throw RangeError("composition parts must be positive");
    total_ += k;
  }
}

Integer Composition::parts_factorial() const {
  Integer out = 1;
  for (int k : parts_) out *= factorial(static_cast<unsigned long>(k));
  return out;
}

Integer Composition::shifted_parts_factorial() const {
  Integer out = 1;
  for (int k : parts_) out *= factorial(static_cast<unsigned long>(k) + 1);
  return out;
}

std::uint64_t Composition::mask() const {
  if (total_ > 64) throw RangeError("composition too large for a 64-bit mask");
  // Bars sit after each part but the last; gap d (1-based from the left)
  // corresponds to bit n-1-d.
  std::uint64_t m = 0;
  int pos = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    pos += parts_[i];
    m |= std::uint64_t(1) << (total_ - 1 - pos);
  }
  return m;
}

std::string Composition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << '+';
    os << parts_[i];
  }
  return os.str();
}

Composition from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw RangeError("from_mask: n out of range");
  if (n < 64 && mask >> (n - 1) != 0) throw RangeError("from_mask: mask has bits outside the n-1 gaps");
  std::vector<int> parts;
  int cur = 1;
  for (int d = 1; d <= n - 1; ++d) {
    if ((mask >> (n - 1 - d)) & 1) {
      parts.push_back(cur);
      cur = 1;
    } else {
      ++cur;
    }
  }
  parts.push_back(cur);
  return Composition(std::move(parts));
}

int digit_sum_s2(std::uint64_t k) { return std::popcount(k); }

CompositionRange::CompositionRange(int n) : n_(n) {}

CompositionRange enumerate(int n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw SizeGuardError("enumerate: n outside [1, 30]", kMaxEnumerationN);
  return CompositionRange(n);
}

PartSet::PartSet(std::vector<int> members) : members_(std::move(members)) {
  if (members_.empty()) throw RangeError("part set must be non-empty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.front() < 1) throw RangeError("part set members must be positive");
}

bool PartSet::contains(int j) const {
  return std::binary_search(members_.begin(), members_.end(), j);
}

std::string PartSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

namespace {

// reachable[m] says whether m is a sum of parts from J (with 0 reachable).
std::vector<char> reach_table(int n, const std::vector<int>& members) {
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j : members) {
      if (j > m) break;
      if (reach[m - j]) { reach[m] = 1; break; }
    }
  return reach;
}

}  // namespace

RestrictedCompositionRange::RestrictedCompositionRange(int n, PartSet parts)
    : n_(n),
      members_(std::make_shared<const std::vector<int>>(parts.members())),
      reachable_(std::make_shared<const std::vector<char>>(reach_table(n, parts.members()))) {
  if (n < 1) throw RangeError("enumerate_restricted: n must be positive");
}

RestrictedCompositionRange::iterator RestrictedCompositionRange::begin() const {
  if (!(*reachable_)[n_]) return iterator();
  return iterator(n_, members_, reachable_);
}

RestrictedCompositionRange::iterator::iterator(
    int n, std::shared_ptr<const std::vector<int>> members,
    std::shared_ptr<const std::vector<char>> reachable)
    : n_(n), members_(std::move(members)), reachable_(std::move(reachable)) {
  fill_minimal(n_);
}

void RestrictedCompositionRange::iterator::fill_minimal(int remaining) {
  while (remaining > 0)
    for (int j : *members_) {
      if (j > remaining) break;
      if ((*reachable_)[remaining - j]) {
        current_.push_back(j);
        remaining -= j;
        break;
      }
    }
}

RestrictedCompositionRange::iterator& RestrictedCompositionRange::iterator::operator++() {
  // Lexicographic successor: grow the last part that can grow, then pad
  // minimally.
  int freed = 0;
  while (!current_.empty()) {
    int k = current_.back();
    current_.pop_back();
    freed += k;
    for (int j : *members_) {
      if (j <= k) continue;
      if (j > freed) break;
      if ((*reachable_)[freed - j]) {
        current_.push_back(j);
        fill_minimal(freed - j);
        return *this;
      }
    }
  }
  done_ = true;
  return *this;
}

RestrictedCompositionRange enumerate_restricted(int n, const PartSet& parts) {
  return RestrictedCompositionRange(n, parts);
}

std::vector<Integer> count_restricted_upto(int max_n, const PartSet& parts) {
  if (max_n < 0) throw RangeError("count_restricted_upto: negative n");
  std::vector<Integer> x(static_cast<std::size_t>(max_n) + 1, Integer(0));
  x[0] = 1;
  for (int n = 1; n <= max_n; ++n)
    for (int j : parts.members()) {
      if (j > n) break;
      x[n] += x[n - j];
    }
  return x;
}

Integer count_restricted(int n, const PartSet& parts) {
  return count_restricted_upto(n, parts).back();
}

}  // namespace compsum
