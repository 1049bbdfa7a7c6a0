#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace bmenet {

class CircularOrdering;

// An unordered bipartition A|B of the taxa 1..n. The stored side is the one
// not containing taxon 1, kept as a bitmask with taxon t at bit t-1, so each
// bipartition has a unique representation.
class Split {
 public:
  // Accepts either side of the bipartition; members must lie in 1..n and the
  // part must be nonempty and proper.
  Split(int ambient_n, std::span<const int> members);
  static Split from_mask(int ambient_n, std::uint64_t mask);
  static Split trivial(int ambient_n, int taxon);

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int part_size() const;
  bool trivial_split() const;
  bool contains(int taxon) const { return (mask_ >> (taxon - 1)) & 1u; }
  bool separates(int i, int j) const { return contains(i) != contains(j); }

  // Ascending members of the canonical (taxon-1-free) side.
  std::vector<int> part() const;

  bool operator==(const Split& other) const = default;
  // Ambient first, then the canonical side in lexicographic member order.
  std::strong_ordering operator<=>(const Split& other) const;

 private:
  Split(int n, std::uint64_t mask, bool) : n_(n), mask_(mask) {}
  int n_;
  std::uint64_t mask_;
};

// True iff at least one of the four pairwise part intersections is empty;
// for splits drawn as diagonals of a common polygon this is "noncrossing".
bool splits_compatible(const Split& a, const Split& b);

// True iff the canonical side occupies cyclically consecutive positions of c.
bool is_arc(const Split& split, const CircularOrdering& c);

// All n trivial splits of 1..n.
std::vector<Split> trivial_splits(int n);

// The n(n-3)/2 nontrivial splits whose sides are arcs of c, in key order.
std::vector<Split> nontrivial_arc_splits(const CircularOrdering& c);

}  // namespace bmenet
