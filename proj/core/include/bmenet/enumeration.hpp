#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bmenet/network.hpp"
#include "bmenet/rational.hpp"

namespace bmenet {

// T(n,k): number of k-element noncrossing diagonal sets of the fixed n-gon,
// the face numbers of the associahedron. (1/(k+1)) * C(n-3,k) * C(n+k-1,k).
Int associahedron_face_count(int n, int k);

// v(n,k): number of binary level-1 networks with n leaves and k bridges,
// C(n-3,k) * (n+k-1)! / (2k+2)!!. Equals T(n,k) * (n-1)! / 2^(k+1).
Int network_count(int n, int k);

// Sum of v(n,k) over k = 0..n-3.
Int network_count_row_sum(int n);

struct CountTable {
  int n_min = 0, n_max = 0;
  std::vector<std::vector<Int>> values;  // values[n - n_min][k], k = 0..n-3
  std::vector<Int> row_sums;
  static CountTable compute(int n_min, int n_max);
};

// A set of noncrossing diagonals of the n-gon, as position intervals [a, b]
// with 1 <= a <= b <= n-1 and 2 <= b-a+1 <= n-2, sorted lexicographically.
using DiagonalSet = std::vector<std::pair<int, int>>;

// All T(n,k) diagonal sets, in lexicographic order over the sorted interval
// tuples.
void for_each_diagonal_set(int n, int k,
                           const std::function<void(const DiagonalSet&)>& fn);
std::vector<DiagonalSet> enumerate_diagonal_sets(int n, int k);

// The diagonals of a set as splits of the identity ordering 1..n, where the
// side at positions [a, b] is the taxa a+1..b+1.
std::vector<Split> diagonal_splits(int n, const DiagonalSet& set);

// The (n-1)!/2 canonical circular orderings of 1..n, in lexicographic order.
void for_each_canonical_ordering(int n,
                                 const std::function<void(const CircularOrdering&)>& fn);
std::vector<CircularOrdering> canonical_orderings(int n);

// Every canonical binary level-1 network with n leaves and k bridges exactly
// once, in (ordering, diagonal set) lexicographic order. A raw pair is
// emitted iff its ordering is the least member of its twist orbit, so no
// seen-set is kept.
void for_each_network(int n, int k, const std::function<void(const Network&)>& fn);
std::vector<Network> enumerate_networks(int n, int k);

// Restriction of for_each_network to a contiguous block of the canonical
// ordering list; the blocks partition the enumeration for data-parallel use.
void for_each_network_in_block(std::span<const CircularOrdering> orderings, int k,
                               const std::function<void(const Network&)>& fn);

}  // namespace bmenet
