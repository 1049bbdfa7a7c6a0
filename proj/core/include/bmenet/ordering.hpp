#pragma once

#include <compare>
#include <span>
#include <vector>

namespace bmenet {

// A circular ordering of the taxa 1..n, i.e. a cyclic arrangement considered
// up to rotation and reflection. The stored representative is canonical: it
// starts at taxon 1 and runs toward the smaller of taxon 1's two neighbours,
// so seq[0] == 1 and seq[1] < seq[n-1].
class CircularOrdering {
 public:
  // Validates that seq is a permutation of 1..n (n >= 3) and canonicalizes.
  static CircularOrdering canonicalize(std::span<const int> seq);
  // Canonicalizes without validation; seq must be a permutation of 1..n.
  static CircularOrdering from_permutation_unchecked(std::span<const int> seq);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }

  // Position of a taxon in the stored representative, 0-based.
  int position_of(int taxon) const;
  bool adjacent(int i, int j) const;

  bool operator==(const CircularOrdering& other) const = default;
  std::strong_ordering operator<=>(const CircularOrdering& other) const;

 private:
  explicit CircularOrdering(std::vector<int> seq) : seq_(std::move(seq)) {}
  std::vector<int> seq_;
};

namespace detail {
// Writes the canonical representative of the cyclic class of `seq` into `out`.
void canonical_cycle(std::span<const int> seq, std::vector<int>& out);
}  // namespace detail

}  // namespace bmenet
