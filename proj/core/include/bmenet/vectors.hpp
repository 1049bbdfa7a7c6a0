#pragma once

#include <cstdint>
#include <utility>

#include "bmenet/network.hpp"
#include "bmenet/pair_vector.hpp"
#include "bmenet/subdivision.hpp"

namespace bmenet {

// 0/1 adjacency vector of a tour: component (i,j) is 1 iff i and j are
// neighbours in c.
PairVector incidence_vector(const CircularOrdering& c);

// Number of bridges separating i from j.
int bridge_count_between(const Network& net, int i, int j);

// The vertex vector: component (i,j) is 2^(k - b_ij) when some consistent
// ordering has i and j adjacent, 0 otherwise. Computed in closed form by
// walking region boundaries of the polygon subdivision; no orbit is expanded.
PairVector network_vector(const Network& net);

// The same vector as the sum of incidence vectors over all 2^k consistent
// orderings; the other route of the vertex-vector identity.
PairVector network_vector_by_orbit(const Network& net);

// Closed-form component (i,j) as a machine integer, 2^(k-b_ij) or 0, using a
// prebuilt subdivision. Exposed for the exhaustive evaluation loops.
std::int64_t network_vector_entry(const Network& net, const PolygonSubdivision& sub,
                                  int i, int j);

// Removes one bridge in its two twist positions: returns networks s' and s''
// with k-1 bridges such that x(net) = x(s') + x(s'') and whose consistent
// orderings partition those of net. Ordered with the smaller canonical key
// first.
std::pair<Network, Network> twist_decompose(const Network& net, const Split& bridge);

}  // namespace bmenet
