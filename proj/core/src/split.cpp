#include "bmenet/split.hpp"

#include <algorithm>
#include <bit>

#include "bmenet/error.hpp"
#include "bmenet/ordering.hpp"

namespace bmenet {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Split Split::from_mask(int ambient_n, std::uint64_t mask) {
  if (ambient_n < 3 || ambient_n > 64)
    fail(ErrorCode::OutOfRange, "ambient taxon count must be in 3..64");
  mask &= full_mask(ambient_n);
  if (mask & 1u) mask = full_mask(ambient_n) & ~mask;  // canonical side avoids taxon 1
  if (mask == 0)
    fail(ErrorCode::OutOfRange, "split parts must both be nonempty");
  return Split(ambient_n, mask, true);
}

Split::Split(int ambient_n, std::span<const int> members) : n_(ambient_n), mask_(0) {
  if (ambient_n < 3 || ambient_n > 64)
    fail(ErrorCode::OutOfRange, "ambient taxon count must be in 3..64");
  std::uint64_t mask = 0;
  for (int t : members) {
    if (t < 1 || t > ambient_n)
      fail(ErrorCode::OutOfRange, "split member outside 1..n");
    mask |= std::uint64_t{1} << (t - 1);
  }
  if (mask == 0 || mask == full_mask(ambient_n))
    fail(ErrorCode::OutOfRange, "split parts must both be nonempty");
  if (mask & 1u) mask = full_mask(ambient_n) & ~mask;
  mask_ = mask;
}

Split Split::trivial(int ambient_n, int taxon) {
  const int members[] = {taxon};
  return Split(ambient_n, members);
}

int Split::part_size() const { return std::popcount(mask_); }

bool Split::trivial_split() const {
  const int size = part_size();
  return size == 1 || size == n_ - 1;
}

std::vector<int> Split::part() const {
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(part_size()));
  for (int t = 1; t <= n_; ++t)
    if (contains(t)) members.push_back(t);
  return members;
}

std::strong_ordering Split::operator<=>(const Split& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (mask_ == other.mask_) return std::strong_ordering::equal;
  const auto a = part();
  const auto b = other.part();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool splits_compatible(const Split& a, const Split& b) {
  if (a.ambient() != b.ambient())
    fail(ErrorCode::AmbientMismatch, "splits on different taxon sets");
  const std::uint64_t full = full_mask(a.ambient());
  const std::uint64_t am = a.mask(), bm = b.mask();
  return (am & bm) == 0 || (am & ~bm & full) == 0 || (~am & bm & full) == 0 ||
         (~am & ~bm & full) == 0;
}

bool is_arc(const Split& split, const CircularOrdering& c) {
  if (split.ambient() != c.size())
    fail(ErrorCode::AmbientMismatch, "split and ordering on different taxon sets");
  const int n = c.size();
  // Count cyclic boundaries between in-part and out-of-part positions.
  int boundaries = 0;
  bool prev = split.contains(c.seq()[n - 1]);
  for (int p = 0; p < n; ++p) {
    const bool cur = split.contains(c.seq()[p]);
    if (cur != prev) ++boundaries;
    prev = cur;
  }
  return boundaries == 2;
}

std::vector<Split> trivial_splits(int n) {
  std::vector<Split> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) out.push_back(Split::trivial(n, t));
  return out;
}

std::vector<Split> nontrivial_arc_splits(const CircularOrdering& c) {
  const int n = c.size();
  std::vector<Split> out;
  // Canonical sides are exactly the runs of positions [a, b] avoiding
  // position 0 (where taxon 1 sits), of length 2..n-2.
  for (int a = 1; a < n; ++a) {
    std::uint64_t mask = 0;
    mask |= std::uint64_t{1} << (c.seq()[a] - 1);
    for (int b = a + 1; b < n; ++b) {
      mask |= std::uint64_t{1} << (c.seq()[b] - 1);
      if (b - a + 1 <= n - 2) out.push_back(Split::from_mask(n, mask));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bmenet
