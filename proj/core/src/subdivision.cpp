#include "bmenet/subdivision.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

PolygonSubdivision PolygonSubdivision::build(const Network& net) {
  PolygonSubdivision sub;
  const int n = net.ambient();
  sub.n = n;
  const auto& seq = net.ordering().seq();
  const auto& intervals = net.bridge_intervals();
  const int k = net.bridge_count();

  sub.regions.resize(static_cast<std::size_t>(k) + 1);
  sub.regions[0].parent = -1;
  sub.regions[0].begin = 0;
  sub.regions[0].end = n - 1;
  for (int i = 0; i < k; ++i) {
    auto& region = sub.regions[static_cast<std::size_t>(i) + 1];
    region.begin = intervals[static_cast<std::size_t>(i)].first;
    region.end = intervals[static_cast<std::size_t>(i)].second;
    // Parent: the shortest interval properly containing this one.
    region.parent = 0;
    int best_length = n + 1;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const auto& other = intervals[static_cast<std::size_t>(j)];
      const int length = other.second - other.first;
      if (other.first <= region.begin && region.end <= other.second &&
          (other.first < region.begin || region.end < other.second) &&
          length < best_length) {
        best_length = length;
        region.parent = j + 1;
      }
    }
  }

  // Start of every child interval, per region.
  std::vector<std::vector<std::pair<int, int>>> child_starts(sub.regions.size());
  for (int i = 1; i <= k; ++i)
    child_starts[static_cast<std::size_t>(sub.regions[static_cast<std::size_t>(i)].parent)]
        .emplace_back(sub.regions[static_cast<std::size_t>(i)].begin, i);
  for (auto& starts : child_starts) std::sort(starts.begin(), starts.end());

  auto taxa_of_interval = [&](int begin, int end) {
    std::uint64_t mask = 0;
    for (int p = begin; p <= end; ++p) mask |= std::uint64_t{1} << (seq[p] - 1);
    return mask;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  sub.region_of_position.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t r = 0; r < sub.regions.size(); ++r) {
    Region& region = sub.regions[r];
    auto next_child = child_starts[r].begin();
    int p = region.begin;
    while (p <= region.end) {
      if (next_child != child_starts[r].end() && next_child->first == p) {
        const int child = next_child->second;
        const Region& child_region = sub.regions[static_cast<std::size_t>(child)];
        region.boundary.push_back(
            {ElementKind::ChildDiagonal, child,
             taxa_of_interval(child_region.begin, child_region.end)});
        p = child_region.end + 1;
        ++next_child;
      } else {
        region.boundary.push_back(
            {ElementKind::Side, p, std::uint64_t{1} << (seq[p] - 1)});
        sub.region_of_position[static_cast<std::size_t>(p)] = static_cast<int>(r);
        ++p;
      }
    }
    if (r != 0)
      region.boundary.push_back(
          {ElementKind::OwnDiagonal, -1, full & ~taxa_of_interval(region.begin, region.end)});
  }
  return sub;
}

int PolygonSubdivision::side_element(int region, int position) const {
  const auto& boundary = regions[static_cast<std::size_t>(region)].boundary;
  for (int i = 0; i < static_cast<int>(boundary.size()); ++i)
    if (boundary[static_cast<std::size_t>(i)].kind == ElementKind::Side &&
        boundary[static_cast<std::size_t>(i)].index == position)
      return i;
  fail(ErrorCode::OutOfRange, "position is not a side of the region");
}

int PolygonSubdivision::diagonal_element(int region, int neighbour) const {
  const auto& boundary = regions[static_cast<std::size_t>(region)].boundary;
  const bool toward_parent = regions[static_cast<std::size_t>(neighbour)].parent != region;
  for (int i = 0; i < static_cast<int>(boundary.size()); ++i) {
    const Element& e = boundary[static_cast<std::size_t>(i)];
    if (toward_parent && e.kind == ElementKind::OwnDiagonal) return i;
    if (!toward_parent && e.kind == ElementKind::ChildDiagonal && e.index == neighbour)
      return i;
  }
  fail(ErrorCode::OutOfRange, "regions are not adjacent");
}

bool PolygonSubdivision::boundary_adjacent(int region, int elem_a, int elem_b) const {
  const int m = static_cast<int>(regions[static_cast<std::size_t>(region)].boundary.size());
  const int diff = (elem_a - elem_b + m) % m;
  return diff == 1 || diff == m - 1;
}

}  // namespace bmenet
