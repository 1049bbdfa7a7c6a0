#include "bmenet/enumeration.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

namespace {

void check_range(int n, int k) {
  if (n < 3) fail(ErrorCode::OutOfRange, "need at least three taxa");
  if (k < 0 || k > n - 3) fail(ErrorCode::OutOfRange, "bridge count must be in 0..n-3");
}

}  // namespace

Int associahedron_face_count(int n, int k) {
  check_range(n, k);
  Int value = binomial(static_cast<unsigned>(n - 3), static_cast<unsigned>(k)) *
              binomial(static_cast<unsigned>(n + k - 1), static_cast<unsigned>(k));
  return value / (k + 1);  // exact
}

Int network_count(int n, int k) {
  check_range(n, k);
  return binomial(static_cast<unsigned>(n - 3), static_cast<unsigned>(k)) *
         factorial(static_cast<unsigned>(n + k - 1)) / double_factorial(2 * k + 2);
}

Int network_count_row_sum(int n) {
  Int sum = 0;
  for (int k = 0; k <= n - 3; ++k) sum += network_count(n, k);
  return sum;
}

CountTable CountTable::compute(int n_min, int n_max) {
  if (n_min < 3 || n_max < n_min) fail(ErrorCode::OutOfRange, "bad row range");
  CountTable table;
  table.n_min = n_min;
  table.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Int> row;
    for (int k = 0; k <= n - 3; ++k) row.push_back(network_count(n, k));
    Int sum = 0;
    for (const Int& v : row) sum += v;
    table.values.push_back(std::move(row));
    table.row_sums.push_back(std::move(sum));
  }
  return table;
}

namespace {

bool laminar(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  const bool disjoint = a.second < b.first || b.second < a.first;
  const bool a_in_b = b.first <= a.first && a.second <= b.second;
  const bool b_in_a = a.first <= b.first && b.second <= a.second;
  return disjoint || a_in_b || b_in_a;
}

void diagonal_sets_rec(const std::vector<std::pair<int, int>>& all, std::size_t start,
                       int remaining, DiagonalSet& chosen,
                       const std::function<void(const DiagonalSet&)>& fn) {
  if (remaining == 0) {
    fn(chosen);
    return;
  }
  for (std::size_t idx = start;
       idx + static_cast<std::size_t>(remaining) <= all.size(); ++idx) {
    bool ok = true;
    for (const auto& prev : chosen) {
      if (!laminar(all[idx], prev)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(all[idx]);
    diagonal_sets_rec(all, idx + 1, remaining - 1, chosen, fn);
    chosen.pop_back();
  }
}

std::vector<std::pair<int, int>> all_diagonals(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n - 1 && b - a + 1 <= n - 2; ++b)
      out.emplace_back(a, b);
  return out;
}

}  // namespace

void for_each_diagonal_set(int n, int k,
                           const std::function<void(const DiagonalSet&)>& fn) {
  check_range(n, k);
  const auto all = all_diagonals(n);
  DiagonalSet chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  diagonal_sets_rec(all, 0, k, chosen, fn);
}

std::vector<DiagonalSet> enumerate_diagonal_sets(int n, int k) {
  std::vector<DiagonalSet> out;
  for_each_diagonal_set(n, k, [&](const DiagonalSet& set) { out.push_back(set); });
  return out;
}

std::vector<Split> diagonal_splits(int n, const DiagonalSet& set) {
  std::vector<Split> out;
  out.reserve(set.size());
  for (const auto& [a, b] : set) {
    std::uint64_t mask = 0;
    for (int p = a; p <= b; ++p) mask |= std::uint64_t{1} << p;
    out.push_back(Split::from_mask(n, mask));
  }
  return out;
}

void for_each_canonical_ordering(int n,
                                 const std::function<void(const CircularOrdering&)>& fn) {
  if (n < 3) fail(ErrorCode::OutOfRange, "need at least three taxa");
  std::vector<int> seq(static_cast<std::size_t>(n));
  seq[0] = 1;
  for (int i = 1; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  do {
    if (seq[1] < seq[static_cast<std::size_t>(n - 1)])
      fn(CircularOrdering::from_permutation_unchecked(seq));
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

std::vector<CircularOrdering> canonical_orderings(int n) {
  std::vector<CircularOrdering> out;
  for_each_canonical_ordering(n, [&](const CircularOrdering& c) { out.push_back(c); });
  return out;
}

// Trusted constructor access for the enumerator: the emitted pairs are
// already canonical, so re-running make_network's orbit search is wasted.
class NetworkEnumerator {
 public:
  static Network emit(const CircularOrdering& c, const DiagonalSet& set) {
    std::vector<Split> bridges;
    std::vector<std::pair<int, int>> intervals;
    bridges.reserve(set.size());
    intervals.reserve(set.size());
    for (const auto& [a, b] : set) {
      std::uint64_t mask = 0;
      for (int p = a; p <= b; ++p) mask |= std::uint64_t{1} << (c.seq()[p] - 1);
      bridges.push_back(Split::from_mask(c.size(), mask));
      intervals.emplace_back(a, b);
    }
    return Network(c, std::move(bridges), std::move(intervals));
  }
};

void for_each_network_in_block(std::span<const CircularOrdering> orderings, int k,
                               const std::function<void(const Network&)>& fn) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(k));
  for (const CircularOrdering& c : orderings) {
    const int n = c.size();
    for_each_diagonal_set(n, k, [&](const DiagonalSet& set) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        std::uint64_t mask = 0;
        for (int p = set[i].first; p <= set[i].second; ++p)
          mask |= std::uint64_t{1} << (c.seq()[p] - 1);
        masks[i] = mask;
      }
      if (detail::is_least_in_orbit(c.seq(), masks)) fn(NetworkEnumerator::emit(c, set));
    });
  }
}

void for_each_network(int n, int k, const std::function<void(const Network&)>& fn) {
  check_range(n, k);
  const auto orderings = canonical_orderings(n);
  for_each_network_in_block(orderings, k, fn);
}

std::vector<Network> enumerate_networks(int n, int k) {
  std::vector<Network> out;
  for_each_network(n, k, [&](const Network& net) { out.push_back(net); });
  return out;
}

}  // namespace bmenet
