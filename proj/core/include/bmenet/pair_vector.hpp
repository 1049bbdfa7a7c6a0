#pragma once

#include <cstddef>
#include <vector>

#include "bmenet/rational.hpp"

namespace bmenet {

// An exact vector with one component per unordered taxon pair of 1..n, in
// lexicographic pair order (1,2),(1,3),...,(n-1,n).
class PairVector {
 public:
  PairVector() : n_(0) {}
  explicit PairVector(int n) : n_(n), values_(pair_count(n), Rational(0)) {}

  static std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }
  static std::size_t index_of(int n, int i, int j);

  int ambient() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  Rational& at(int i, int j) { return values_[index_of(n_, i, j)]; }
  const Rational& at(int i, int j) const { return values_[index_of(n_, i, j)]; }
  Rational& operator[](std::size_t idx) { return values_[idx]; }
  const Rational& operator[](std::size_t idx) const { return values_[idx]; }

  Rational dot(const PairVector& other) const;
  Rational component_sum() const;
  // Sum over all pairs containing the given taxon.
  Rational taxon_sum(int taxon) const;

  PairVector& operator+=(const PairVector& other);
  friend PairVector operator+(PairVector lhs, const PairVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool operator==(const PairVector& other) const = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

}  // namespace bmenet
