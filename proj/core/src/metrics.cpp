#include "bmenet/metrics.hpp"

#include <algorithm>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/vectors.hpp"

namespace bmenet {

DistanceMatrix::DistanceMatrix(PairVector entries) : entries_(std::move(entries)) {
  for (const Rational& v : entries_.values())
    if (v < 0) fail(ErrorCode::NegativeDistance, "distances must be nonnegative");
}

DistanceMatrix metric_from_splits(const WeightedSplitSystem& ws) {
  const int n = ws.ambient();
  PairVector d(n);
  const auto& splits = ws.system().splits();
  for (std::size_t idx = 0; idx < splits.size(); ++idx) {
    const Split& s = splits[idx];
    const Rational& w = ws.weights()[idx];
    if (w == 0) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (s.separates(i, j)) d.at(i, j) += w;
  }
  return DistanceMatrix(std::move(d));
}

Rational total_weight(const WeightedSplitSystem& ws) {
  Rational sum = 0;
  for (const Rational& w : ws.weights()) sum += w;
  return sum;
}

Rational network_length(const Network& net, const DistanceMatrix& d) {
  if (net.ambient() != d.ambient())
    fail(ErrorCode::AmbientMismatch, "network and matrix on different taxon sets");
  return network_vector(net).dot(d.entries());
}

bool kalmanson_check(const DistanceMatrix& d, const CircularOrdering& c) {
  if (d.ambient() != c.size())
    fail(ErrorCode::AmbientMismatch, "matrix and ordering on different taxon sets");
  const int n = c.size();
  const auto& seq = c.seq();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
          const int a = seq[p], b = seq[q], cc = seq[r], dd = seq[s];
          const Rational crossing = d.at(a, cc) + d.at(b, dd);
          if (d.at(a, b) + d.at(cc, dd) > crossing) return false;
          if (d.at(b, cc) + d.at(a, dd) > crossing) return false;
        }
  return true;
}

namespace {

// Isolation weight of the arc of positions [p, q] of c (indices cyclic):
// half of d(p-1, q) + d(p, q+1) - d(p-1, q+1) - d(p, q). The singleton arc
// uses the degenerate form with p == q.
Rational isolation_weight(const DistanceMatrix& d, const CircularOrdering& c, int p, int q) {
  const int n = c.size();
  const auto& seq = c.seq();
  const int before = seq[(p + n - 1) % n];
  const int first = seq[p];
  const int last = seq[q];
  const int after = seq[(q + 1) % n];
  Rational value = d.at(before, last) - d.at(before, after);
  if (first != last) value += d.at(first, after) - d.at(first, last);
  else value += d.at(first, after);
  return value / 2;
}

}  // namespace

WeightedSplitSystem kalmanson_decompose(const DistanceMatrix& d, const CircularOrdering& c) {
  if (d.ambient() != c.size())
    fail(ErrorCode::AmbientMismatch, "matrix and ordering on different taxon sets");
  if (!kalmanson_check(d, c))
    fail(ErrorCode::NotKalmanson, "metric violates the Kalmanson condition on this ordering");
  const int n = c.size();

  std::vector<Split> splits;
  std::vector<Rational> weights;
  // Trivial splits: singleton arcs, kept even at weight zero.
  for (int p = 0; p < n; ++p) {
    const Rational w = isolation_weight(d, c, p, p);
    if (w < 0) fail(ErrorCode::NotKalmanson, "negative isolation weight");
    splits.push_back(Split::trivial(n, c.seq()[p]));
    weights.push_back(w);
  }
  // Nontrivial arcs avoiding position 0 enumerate each arc split once, by its
  // canonical side.
  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q < n && q - p + 1 <= n - 2; ++q) {
      const Rational w = isolation_weight(d, c, p, q);
      if (w < 0) fail(ErrorCode::NotKalmanson, "negative isolation weight");
      if (w == 0) continue;
      std::vector<int> members;
      for (int t = p; t <= q; ++t) members.push_back(c.seq()[t]);
      splits.push_back(Split(n, members));
      weights.push_back(w);
    }
  }

  // The splits vector is not sorted; align weights with the sorted system.
  std::vector<std::size_t> order(splits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return splits[a] < splits[b]; });
  std::vector<Split> sorted_splits;
  std::vector<Rational> sorted_weights;
  for (std::size_t i : order) {
    sorted_splits.push_back(splits[i]);
    sorted_weights.push_back(weights[i]);
  }
  WeightedSplitSystem result(SplitSystem(n, std::move(sorted_splits), c),
                             std::move(sorted_weights));
  if (!(metric_from_splits(result) == d))
    fail(ErrorCode::NotKalmanson, "isolation weights do not reproduce the metric");
  return result;
}

DistanceMatrix shortest_path_metric(const PhyloGraph& g) {
  if (!g.weighted()) fail(ErrorCode::UnweightedGraph, "all edges need weights");
  const int size = g.node_count;
  const Rational unreachable = -1;
  std::vector<std::vector<Rational>> dist(
      static_cast<std::size_t>(size),
      std::vector<Rational>(static_cast<std::size_t>(size), unreachable));
  for (int v = 0; v < size; ++v) dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
  for (const auto& e : g.edges) {
    auto& duv = dist[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    if (duv < 0 || *e.weight < duv) {
      duv = *e.weight;
      dist[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = *e.weight;
    }
  }
  for (int via = 0; via < size; ++via)
    for (int u = 0; u < size; ++u) {
      const auto& d_uv = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(via)];
      if (d_uv < 0) continue;
      for (int v = 0; v < size; ++v) {
        const auto& d_vw = dist[static_cast<std::size_t>(via)][static_cast<std::size_t>(v)];
        if (d_vw < 0) continue;
        auto& cur = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        const Rational candidate = d_uv + d_vw;
        if (cur < 0 || candidate < cur) cur = candidate;
      }
    }

  PairVector entries(g.leaf_count);
  for (int i = 1; i <= g.leaf_count; ++i)
    for (int j = i + 1; j <= g.leaf_count; ++j) {
      const Rational& value =
          dist[static_cast<std::size_t>(g.leaf_node(i))][static_cast<std::size_t>(g.leaf_node(j))];
      if (value < 0) fail(ErrorCode::OutOfRange, "graph is not connected");
      entries.at(i, j) = value;
    }
  return DistanceMatrix(std::move(entries));
}

std::optional<CircularOrdering> find_consistent_ordering(const DistanceMatrix& d) {
  const int n = d.ambient();
  if (n > 9) fail(ErrorCode::TooLarge, "brute-force ordering search is limited to n <= 9");
  std::optional<CircularOrdering> found;
  // Orderings come lexicographically, so the first hit is the answer.
  for_each_canonical_ordering(n, [&](const CircularOrdering& c) {
    if (!found && kalmanson_check(d, c)) found = c;
  });
  return found;
}

}  // namespace bmenet
