#pragma once

#include <optional>

#include "bmenet/graph.hpp"
#include "bmenet/network.hpp"
#include "bmenet/pair_vector.hpp"
#include "bmenet/rational.hpp"
#include "bmenet/split_system.hpp"

namespace bmenet {

// A symmetric matrix of exact nonnegative pairwise distances with zero
// diagonal, stored as the C(n,2) upper entries.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : entries_(n) {}
  explicit DistanceMatrix(PairVector entries);

  int ambient() const { return entries_.ambient(); }
  const Rational& at(int i, int j) const { return entries_.at(i, j); }
  Rational& at(int i, int j) { return entries_.at(i, j); }
  const PairVector& entries() const { return entries_; }

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  PairVector entries_;
};

// d_s: each pair's distance is the total weight of the splits separating it.
DistanceMatrix metric_from_splits(const WeightedSplitSystem& ws);

// W(s): sum of all split weights.
Rational total_weight(const WeightedSplitSystem& ws);

// The length x(net) . d.
Rational network_length(const Network& net, const DistanceMatrix& d);

// The Kalmanson condition on the given ordering: for taxa a,b,c,d in cyclic
// positions p < q < r < s, max{d_ab + d_cd, d_bc + d_ad} <= d_ac + d_bd.
bool kalmanson_check(const DistanceMatrix& d, const CircularOrdering& c);

// The unique weighted circular split system on witness c whose metric is d.
// Split weights come from the circular isolation formula; requires
// kalmanson_check(d, c) and verifies the reconstruction, raising NotKalmanson
// otherwise.
WeightedSplitSystem kalmanson_decompose(const DistanceMatrix& d, const CircularOrdering& c);

// Exact leaf-to-leaf shortest-path distances of a weighted graph.
DistanceMatrix shortest_path_metric(const PhyloGraph& g);

// Lexicographically least canonical ordering passing kalmanson_check, if any.
// Brute force over all (n-1)!/2 orderings; n <= 9.
std::optional<CircularOrdering> find_consistent_ordering(const DistanceMatrix& d);

}  // namespace bmenet
