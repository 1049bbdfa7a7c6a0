#pragma once

#include <compare>
#include <span>
#include <vector>

#include "bmenet/ordering.hpp"
#include "bmenet/split.hpp"
#include "bmenet/split_system.hpp"

namespace bmenet {

// A binary level-1 phylogenetic network with n leaves and k nontrivial
// bridges, encoded as a circular ordering plus k pairwise compatible
// nontrivial arc splits and taken modulo twisting around bridges. The stored
// ordering is the lexicographically least of the 2^k consistent orderings,
// which makes the value a canonical representative of its twist class.
class Network {
 public:
  const CircularOrdering& ordering() const { return ordering_; }
  // Sorted by their arc interval on ordering(); every bridge is an arc of
  // every consistent ordering.
  const std::vector<Split>& bridges() const { return bridges_; }
  int ambient() const { return ordering_.size(); }
  int bridge_count() const { return static_cast<int>(bridges_.size()); }
  bool has_bridge(const Split& s) const;

  // Positions [a, b] of each bridge's canonical side on the stored ordering.
  const std::vector<std::pair<int, int>>& bridge_intervals() const { return intervals_; }

  bool operator==(const Network& other) const {
    return ordering_ == other.ordering_ && bridges_ == other.bridges_;
  }
  std::strong_ordering operator<=>(const Network& other) const;

 private:
  friend Network make_network(const CircularOrdering&, std::span<const Split>);
  friend class NetworkEnumerator;
  Network(CircularOrdering ordering, std::vector<Split> bridges,
          std::vector<std::pair<int, int>> intervals)
      : ordering_(std::move(ordering)),
        bridges_(std::move(bridges)),
        intervals_(std::move(intervals)) {}

  CircularOrdering ordering_;
  std::vector<Split> bridges_;
  std::vector<std::pair<int, int>> intervals_;
};

// Builds the canonical network containing the drawing (c, bridges). Every
// member of a twist class maps to the same value. Bridges must be nontrivial
// arcs of c, pairwise compatible, and at most n-3 of them.
Network make_network(const CircularOrdering& c, std::span<const Split> bridges);

// The drawing obtained from the stored ordering by reversing the bridge's arc
// segment (the side containing taxon 1 is the one reversed). An involution;
// the result is generally not in canonical form.
std::vector<int> twist_drawing(const Network& net, const Split& bridge);

// The 2^k distinct circular orderings consistent with the network: the orbit
// of the stored ordering under all compositions of bridge twists. Sorted.
std::vector<CircularOrdering> consistent_orderings(const Network& net);

// True iff s is trivial, or s is compatible with every bridge and is an arc
// of the consistent orderings (equivalently: of the stored one).
bool displays_split(const Network& net, const Split& s);

// The maximal split system displayed by the network, with the stored ordering
// as circularity witness. Contains all trivial splits and all bridges.
SplitSystem sigma_splits(const Network& net);

// True iff every split of s is displayed by net.
bool refines(const Network& net, const SplitSystem& s);

namespace detail {

// Reverses, in place, the cyclic block of positions whose taxa lie in
// `block_mask`; the block must be cyclically contiguous.
void reverse_cyclic_block(std::vector<int>& seq, std::uint64_t block_mask);

// Lexicographically least canonical ordering in the twist orbit of `seq`
// under the given bridge masks (canonical sides).
std::vector<int> least_orbit_ordering(const std::vector<int>& seq,
                                      std::span<const std::uint64_t> bridge_masks);

// True iff `seq` (already canonical) is the least member of its twist orbit.
bool is_least_in_orbit(const std::vector<int>& seq,
                       std::span<const std::uint64_t> bridge_masks);

// All canonical orderings of the orbit, unsorted.
std::vector<std::vector<int>> twist_orbit(const std::vector<int>& seq,
                                          std::span<const std::uint64_t> bridge_masks);

}  // namespace detail

}  // namespace bmenet
