#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmenet/network.hpp"
#include "bmenet/rational.hpp"
#include "bmenet/split_system.hpp"

namespace bmenet {

// An unrooted phylogenetic graph: leaves carry taxa 1..n and have degree 1,
// internal nodes have degree 3, every cycle has length >= 4 and every node
// lies on at most one cycle. Node ids 0..n-1 are the leaves of taxa 1..n;
// the rest are internal.
struct PhyloGraph {
  struct Edge {
    int u, v;
    std::optional<Rational> weight;
  };

  int leaf_count = 0;
  int node_count = 0;
  std::vector<Edge> edges;

  int leaf_node(int taxon) const { return taxon - 1; }
  bool weighted() const;
  int degree(int node) const;
};

// Realizes the network: each region of the polygon subdivision with m >= 4
// boundary elements becomes an m-cycle, each triangular region a single
// degree-3 node; leaves attach by polygon side, bridges join regions.
PhyloGraph build_graph(const Network& net);

// Weighted realization. The weight system's splits must be exactly
// sigma_splits(net); each edge carries the total weight of the splits whose
// representing minimal cut contains it.
PhyloGraph build_graph(const Network& net, const WeightedSplitSystem& weights);

// Graphviz form: leaf nodes named by taxon index, internal nodes v0, v1, ...;
// weighted edges carry an exact "weight" attribute.
std::string to_dot(const PhyloGraph& g);

}  // namespace bmenet
