#include "bmenet/vectors.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

PairVector incidence_vector(const CircularOrdering& c) {
  const int n = c.size();
  PairVector x(n);
  for (int p = 0; p < n; ++p) {
    const int i = c.seq()[p];
    const int j = c.seq()[(p + 1) % n];
    x.at(i, j) = 1;
  }
  return x;
}

int bridge_count_between(const Network& net, int i, int j) {
  if (i == j) fail(ErrorCode::SameTaxon, "need two distinct taxa");
  if (i < 1 || i > net.ambient() || j < 1 || j > net.ambient())
    fail(ErrorCode::OutOfRange, "taxon outside 1..n");
  int count = 0;
  for (const Split& b : net.bridges())
    if (b.separates(i, j)) ++count;
  return count;
}

std::int64_t network_vector_entry(const Network& net, const PolygonSubdivision& sub,
                                  int i, int j) {
  const int pi = net.ordering().position_of(i);
  const int pj = net.ordering().position_of(j);

  // Chain of regions from each leaf up to the root of the laminar forest.
  auto chain = [&](int position) {
    std::vector<int> regions;
    int r = sub.region_of_position[static_cast<std::size_t>(position)];
    while (r >= 0) {
      regions.push_back(r);
      r = sub.regions[static_cast<std::size_t>(r)].parent;
    }
    return regions;
  };
  std::vector<int> up_i = chain(pi);
  std::vector<int> up_j = chain(pj);

  // Strip the common tail above the meeting region.
  while (up_i.size() > 1 && up_j.size() > 1 &&
         up_i[up_i.size() - 2] == up_j[up_j.size() - 2]) {
    up_i.pop_back();
    up_j.pop_back();
  }
  if (up_i.back() != up_j.back()) return 0;  // cannot happen: shared root

  // The region path i -> j and the number of diagonals it crosses.
  std::vector<int> path = up_i;
  for (std::size_t idx = up_j.size() - 1; idx-- > 0;) path.push_back(up_j[idx]);
  const int crossings = static_cast<int>(path.size()) - 1;

  // i and j are adjacent in some consistent ordering iff in every region of
  // the path the entry and exit boundary elements are cyclically adjacent;
  // twisting fixes each region's boundary cycle up to reflection.
  for (std::size_t t = 0; t < path.size(); ++t) {
    const int region = path[t];
    const int enter = t == 0 ? sub.side_element(region, pi)
                             : sub.diagonal_element(region, path[t - 1]);
    const int leave = t + 1 == path.size() ? sub.side_element(region, pj)
                                           : sub.diagonal_element(region, path[t + 1]);
    if (!sub.boundary_adjacent(region, enter, leave)) return 0;
  }
  return std::int64_t{1} << (net.bridge_count() - crossings);
}

PairVector network_vector(const Network& net) {
  const int n = net.ambient();
  const PolygonSubdivision sub = PolygonSubdivision::build(net);
  PairVector x(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      x.at(i, j) = network_vector_entry(net, sub, i, j);
  return x;
}

PairVector network_vector_by_orbit(const Network& net) {
  PairVector x(net.ambient());
  for (const CircularOrdering& c : consistent_orderings(net)) x += incidence_vector(c);
  return x;
}

std::pair<Network, Network> twist_decompose(const Network& net, const Split& bridge) {
  if (!net.has_bridge(bridge))
    fail(ErrorCode::NotABridge, "split is not a bridge of the network");
  std::vector<Split> rest;
  for (const Split& b : net.bridges())
    if (b != bridge) rest.push_back(b);
  Network first = make_network(net.ordering(), rest);
  const std::vector<int> twisted = twist_drawing(net, bridge);
  Network second =
      make_network(CircularOrdering::from_permutation_unchecked(twisted), rest);
  if (second < first) std::swap(first, second);
  return {std::move(first), std::move(second)};
}

}  // namespace bmenet
