#include "bmenet/ordering.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

namespace detail {

void canonical_cycle(std::span<const int> seq, std::vector<int>& out) {
  const int n = static_cast<int>(seq.size());
  int start = 0;
  while (seq[start] != 1) ++start;
  const int next = seq[(start + 1) % n];
  const int prev = seq[(start + n - 1) % n];
  out.resize(n);
  if (next < prev) {
    for (int i = 0; i < n; ++i) out[i] = seq[(start + i) % n];
  } else {
    for (int i = 0; i < n; ++i) out[i] = seq[(start + n - i) % n];
  }
}

}  // namespace detail

CircularOrdering CircularOrdering::canonicalize(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) fail(ErrorCode::OutOfRange, "need at least three taxa");
  std::vector<char> seen(n + 1, 0);
  for (int t : seq) {
    if (t < 1 || t > n || seen[t])
      fail(ErrorCode::NotAPermutation, "sequence is not a permutation of 1..n");
    seen[t] = 1;
  }
  return from_permutation_unchecked(seq);
}

CircularOrdering CircularOrdering::from_permutation_unchecked(std::span<const int> seq) {
  std::vector<int> canonical;
  detail::canonical_cycle(seq, canonical);
  return CircularOrdering(std::move(canonical));
}

int CircularOrdering::position_of(int taxon) const {
  for (int i = 0; i < size(); ++i)
    if (seq_[i] == taxon) return i;
  fail(ErrorCode::OutOfRange, "taxon not in ordering");
}

bool CircularOrdering::adjacent(int i, int j) const {
  const int n = size();
  const int pi = position_of(i);
  const int pj = position_of(j);
  const int diff = (pi - pj + n) % n;
  return diff == 1 || diff == n - 1;
}

std::strong_ordering CircularOrdering::operator<=>(const CircularOrdering& other) const {
  return std::lexicographical_compare_three_way(seq_.begin(), seq_.end(),
                                                other.seq_.begin(), other.seq_.end());
}

}  // namespace bmenet
