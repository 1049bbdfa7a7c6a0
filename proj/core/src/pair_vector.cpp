#include "bmenet/pair_vector.hpp"

#include "bmenet/error.hpp"

namespace bmenet {

std::size_t PairVector::index_of(int n, int i, int j) {
  if (i == j) fail(ErrorCode::SameTaxon, "pair components need two distinct taxa");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) fail(ErrorCode::OutOfRange, "taxon outside 1..n");
  return static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

Rational PairVector::dot(const PairVector& other) const {
  if (n_ != other.n_) fail(ErrorCode::AmbientMismatch, "vectors on different taxon sets");
  Rational sum = 0;
  for (std::size_t idx = 0; idx < values_.size(); ++idx)
    sum += values_[idx] * other.values_[idx];
  return sum;
}

Rational PairVector::component_sum() const {
  Rational sum = 0;
  for (const Rational& v : values_) sum += v;
  return sum;
}

Rational PairVector::taxon_sum(int taxon) const {
  Rational sum = 0;
  for (int other = 1; other <= n_; ++other)
    if (other != taxon) sum += at(taxon, other);
  return sum;
}

PairVector& PairVector::operator+=(const PairVector& other) {
  if (n_ != other.n_) fail(ErrorCode::AmbientMismatch, "vectors on different taxon sets");
  for (std::size_t idx = 0; idx < values_.size(); ++idx)
    values_[idx] += other.values_[idx];
  return *this;
}

}  // namespace bmenet
