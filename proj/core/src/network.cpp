#include "bmenet/network.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

namespace detail {

void reverse_cyclic_block(std::vector<int>& seq, std::uint64_t block_mask) {
  const int n = static_cast<int>(seq.size());
  auto in_block = [&](int p) { return (block_mask >> (seq[p] - 1)) & 1u; };
  // Find the start of the block: a block position whose cyclic predecessor
  // is outside.
  int start = -1;
  for (int p = 0; p < n; ++p) {
    if (in_block(p) && !in_block((p + n - 1) % n)) {
      start = p;
      break;
    }
  }
  if (start < 0) return;  // block is everything; reversal is a reflection
  int length = 0;
  while (length < n && in_block((start + length) % n)) ++length;
  for (int i = 0, j = length - 1; i < j; ++i, --j)
    std::swap(seq[(start + i) % n], seq[(start + j) % n]);
}

namespace {

// Expands the twist orbit of `seq` in canonical form. When `reference` is
// given, aborts and returns false as soon as an orbit member sorts below it.
bool expand_orbit(const std::vector<int>& seq,
                  std::span<const std::uint64_t> bridge_masks,
                  const std::vector<int>* reference,
                  std::vector<std::vector<int>>& orbit) {
  orbit.clear();
  orbit.push_back(seq);
  std::vector<int> scratch, canon;
  for (std::size_t next = 0; next < orbit.size(); ++next) {
    for (std::uint64_t mask : bridge_masks) {
      scratch = orbit[next];
      reverse_cyclic_block(scratch, mask);
      canonical_cycle(scratch, canon);
      if (reference && std::lexicographical_compare(canon.begin(), canon.end(),
                                                    reference->begin(), reference->end()))
        return false;
      if (std::find(orbit.begin(), orbit.end(), canon) == orbit.end())
        orbit.push_back(canon);
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> twist_orbit(const std::vector<int>& seq,
                                          std::span<const std::uint64_t> bridge_masks) {
  std::vector<std::vector<int>> orbit;
  expand_orbit(seq, bridge_masks, nullptr, orbit);
  return orbit;
}

std::vector<int> least_orbit_ordering(const std::vector<int>& seq,
                                      std::span<const std::uint64_t> bridge_masks) {
  auto orbit = twist_orbit(seq, bridge_masks);
  return *std::min_element(orbit.begin(), orbit.end());
}

bool is_least_in_orbit(const std::vector<int>& seq,
                       std::span<const std::uint64_t> bridge_masks) {
  std::vector<std::vector<int>> orbit;
  return expand_orbit(seq, bridge_masks, &seq, orbit);
}

}  // namespace detail

namespace {

// Positions [a, b] of the split's canonical side on c; the side of a valid
// bridge is contiguous and avoids position 0, so a plain interval results.
std::pair<int, int> arc_interval(const Split& s, const CircularOrdering& c) {
  const int n = c.size();
  int a = -1, b = -1;
  for (int p = 0; p < n; ++p) {
    if (s.contains(c.seq()[p])) {
      if (a < 0) a = p;
      b = p;
    }
  }
  return {a, b};
}

std::vector<std::pair<int, int>> bridge_intervals_on(const CircularOrdering& c,
                                                     const std::vector<Split>& bridges) {
  std::vector<std::pair<int, int>> intervals;
  intervals.reserve(bridges.size());
  for (const Split& s : bridges) intervals.push_back(arc_interval(s, c));
  return intervals;
}

void sort_bridges_by_interval(const CircularOrdering& c, std::vector<Split>& bridges,
                              std::vector<std::pair<int, int>>& intervals) {
  intervals = bridge_intervals_on(c, bridges);
  std::vector<std::size_t> order(bridges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return intervals[x] < intervals[y];
  });
  std::vector<Split> sorted_bridges;
  std::vector<std::pair<int, int>> sorted_intervals;
  sorted_bridges.reserve(bridges.size());
  sorted_intervals.reserve(bridges.size());
  for (std::size_t i : order) {
    sorted_bridges.push_back(bridges[i]);
    sorted_intervals.push_back(intervals[i]);
  }
  bridges = std::move(sorted_bridges);
  intervals = std::move(sorted_intervals);
}

}  // namespace

Network make_network(const CircularOrdering& c, std::span<const Split> bridges) {
  const int n = c.size();
  std::vector<Split> unique_bridges(bridges.begin(), bridges.end());
  std::sort(unique_bridges.begin(), unique_bridges.end());
  unique_bridges.erase(std::unique(unique_bridges.begin(), unique_bridges.end()),
                       unique_bridges.end());

  if (static_cast<int>(unique_bridges.size()) > n - 3)
    fail(ErrorCode::TooManyBridges, "a binary level-1 network has at most n-3 bridges");
  for (const Split& s : unique_bridges) {
    if (s.ambient() != n)
      fail(ErrorCode::AmbientMismatch, "bridge ambient differs from ordering");
    if (s.trivial_split())
      fail(ErrorCode::TrivialBridge, "bridges must have both parts of size >= 2");
    if (!is_arc(s, c))
      fail(ErrorCode::NotAnArc, "bridge side is not contiguous in ordering");
  }
  for (std::size_t i = 0; i < unique_bridges.size(); ++i)
    for (std::size_t j = i + 1; j < unique_bridges.size(); ++j)
      if (!splits_compatible(unique_bridges[i], unique_bridges[j]))
        fail(ErrorCode::CrossingBridges, "bridges must be pairwise compatible");

  std::vector<std::uint64_t> masks;
  masks.reserve(unique_bridges.size());
  for (const Split& s : unique_bridges) masks.push_back(s.mask());
  std::vector<int> least = detail::least_orbit_ordering(c.seq(), masks);
  CircularOrdering canonical = CircularOrdering::from_permutation_unchecked(least);

  std::vector<std::pair<int, int>> intervals;
  sort_bridges_by_interval(canonical, unique_bridges, intervals);
  return Network(std::move(canonical), std::move(unique_bridges), std::move(intervals));
}

bool Network::has_bridge(const Split& s) const {
  return std::find(bridges_.begin(), bridges_.end(), s) != bridges_.end();
}

std::strong_ordering Network::operator<=>(const Network& other) const {
  if (auto c = ordering_ <=> other.ordering_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      intervals_.begin(), intervals_.end(), other.intervals_.begin(), other.intervals_.end());
}

std::vector<int> twist_drawing(const Network& net, const Split& bridge) {
  if (!net.has_bridge(bridge))
    fail(ErrorCode::NotABridge, "split is not a bridge of the network");
  std::vector<int> drawing = net.ordering().seq();
  // Reverse the side containing taxon 1, i.e. the complement of the stored
  // canonical side.
  const std::uint64_t full =
      net.ambient() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << net.ambient()) - 1;
  detail::reverse_cyclic_block(drawing, full & ~bridge.mask());
  return drawing;
}

std::vector<CircularOrdering> consistent_orderings(const Network& net) {
  std::vector<std::uint64_t> masks;
  masks.reserve(net.bridges().size());
  for (const Split& s : net.bridges()) masks.push_back(s.mask());
  auto orbit = detail::twist_orbit(net.ordering().seq(), masks);
  std::vector<CircularOrdering> out;
  out.reserve(orbit.size());
  for (auto& seq : orbit)
    out.push_back(CircularOrdering::from_permutation_unchecked(seq));
  std::sort(out.begin(), out.end());
  return out;
}

bool displays_split(const Network& net, const Split& s) {
  if (s.ambient() != net.ambient())
    fail(ErrorCode::AmbientMismatch, "split and network on different taxon sets");
  if (s.trivial_split()) return true;
  for (const Split& b : net.bridges())
    if (!splits_compatible(s, b)) return false;
  // For splits compatible with every bridge, being an arc of one consistent
  // ordering is equivalent to being an arc of all of them.
  return is_arc(s, net.ordering());
}

SplitSystem sigma_splits(const Network& net) {
  std::vector<Split> splits;
  for (const Split& s : nontrivial_arc_splits(net.ordering()))
    if (displays_split(net, s)) splits.push_back(s);
  return SplitSystem(net.ambient(), std::move(splits), net.ordering());
}

bool refines(const Network& net, const SplitSystem& s) {
  if (s.ambient() != net.ambient())
    fail(ErrorCode::AmbientMismatch, "system and network on different taxon sets");
  for (const Split& split : s.splits())
    if (!displays_split(net, split)) return false;
  return true;
}

}  // namespace bmenet
