#pragma once

#include <optional>
#include <vector>

#include "bmenet/ordering.hpp"
#include "bmenet/rational.hpp"
#include "bmenet/split.hpp"

namespace bmenet {

// A set of splits of 1..n containing all n trivial splits, optionally with a
// circular ordering witnessing that every split is an arc of that ordering.
class SplitSystem {
 public:
  // Deduplicates, sorts, and inserts any missing trivial splits. If a witness
  // ordering is given, every split must be an arc of it.
  SplitSystem(int n, std::vector<Split> splits,
              std::optional<CircularOrdering> ordering = std::nullopt);

  static SplitSystem trivial_only(int n);

  int ambient() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }
  const std::optional<CircularOrdering>& ordering() const { return ordering_; }

  bool contains(const Split& s) const;
  std::vector<Split> nontrivial() const;
  // Nontrivial splits compatible with every other split of the system; in the
  // polygonal picture these are the noncrossing diagonals.
  std::vector<Split> bridges() const;

  bool operator==(const SplitSystem& other) const {
    return n_ == other.n_ && splits_ == other.splits_;
  }

 private:
  int n_;
  std::vector<Split> splits_;
  std::optional<CircularOrdering> ordering_;
};

// A split system with nonnegative rational weights. Zero-weight nontrivial
// splits are dropped by the constructor; trivial splits always stay, possibly
// at weight zero.
class WeightedSplitSystem {
 public:
  // `weights` runs parallel to `system.splits()`.
  WeightedSplitSystem(SplitSystem system, std::vector<Rational> weights);

  static WeightedSplitSystem unit_weights(SplitSystem system);

  int ambient() const { return system_.ambient(); }
  const SplitSystem& system() const { return system_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight_of(const Split& s) const;

  bool operator==(const WeightedSplitSystem& other) const {
    return system_ == other.system_ && weights_ == other.weights_;
  }

 private:
  SplitSystem system_;
  std::vector<Rational> weights_;
};

}  // namespace bmenet
