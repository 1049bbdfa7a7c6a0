#pragma once

#include <cstdint>
#include <vector>

#include "bmenet/network.hpp"

namespace bmenet {

// The subdivision of the side-labelled n-gon by a network's bridges, drawn as
// noncrossing diagonals. Every region becomes a cycle (or a single degree-3
// node when triangular) in the realized graph, and walking region boundaries
// answers which leaf pairs can be made adjacent by twisting.
//
// Canonical sides of bridges avoid taxon 1 at position 0, so they are plain
// position intervals [a, b] with 1 <= a <= b <= n-1 and the intervals form a
// laminar family: region r >= 1 corresponds to bridge r-1 of the network, and
// region 0 is the outer face of the laminar forest.
struct PolygonSubdivision {
  enum class ElementKind { Side, ChildDiagonal, OwnDiagonal };

  struct Element {
    ElementKind kind;
    // Side: position of the polygon side; ChildDiagonal: region id of the
    // child; OwnDiagonal: unused (-1).
    int index;
    // Taxa lying behind this boundary element, as a bitmask.
    std::uint64_t taxa;
  };

  struct Region {
    int parent;  // region id, -1 for the root
    int begin, end;  // position interval; the root covers [0, n-1]
    std::vector<Element> boundary;  // in cyclic order around the region
  };

  int n = 0;
  std::vector<Region> regions;       // regions[0] is the root
  std::vector<int> region_of_position;

  static PolygonSubdivision build(const Network& net);

  // Boundary index of the side at `position` within its region.
  int side_element(int region, int position) const;
  // Boundary index of the diagonal toward `neighbour` within `region`, where
  // the two regions are parent and child in the laminar forest.
  int diagonal_element(int region, int neighbour) const;
  // True iff the two boundary elements are cyclically adjacent.
  bool boundary_adjacent(int region, int elem_a, int elem_b) const;
};

}  // namespace bmenet
