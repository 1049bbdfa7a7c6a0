#include "bmenet/split_system.hpp"

#include <algorithm>

#include "bmenet/error.hpp"

namespace bmenet {

SplitSystem::SplitSystem(int n, std::vector<Split> splits,
                         std::optional<CircularOrdering> ordering)
    : n_(n), splits_(std::move(splits)), ordering_(std::move(ordering)) {
  if (n < 3) fail(ErrorCode::OutOfRange, "need at least three taxa");
  for (const Split& s : splits_)
    if (s.ambient() != n)
      fail(ErrorCode::AmbientMismatch, "split ambient differs from system ambient");
  for (const Split& t : trivial_splits(n)) splits_.push_back(t);
  std::sort(splits_.begin(), splits_.end());
  splits_.erase(std::unique(splits_.begin(), splits_.end()), splits_.end());
  if (ordering_) {
    if (ordering_->size() != n)
      fail(ErrorCode::AmbientMismatch, "witness ordering has wrong size");
    for (const Split& s : splits_)
      if (!is_arc(s, *ordering_))
        fail(ErrorCode::NotAnArc, "split is not an arc of the witness ordering");
  }
}

SplitSystem SplitSystem::trivial_only(int n) { return SplitSystem(n, {}); }

bool SplitSystem::contains(const Split& s) const {
  return std::binary_search(splits_.begin(), splits_.end(), s);
}

std::vector<Split> SplitSystem::nontrivial() const {
  std::vector<Split> out;
  for (const Split& s : splits_)
    if (!s.trivial_split()) out.push_back(s);
  return out;
}

std::vector<Split> SplitSystem::bridges() const {
  std::vector<Split> out;
  for (const Split& s : splits_) {
    if (s.trivial_split()) continue;
    bool compatible_with_all = true;
    for (const Split& other : splits_) {
      if (other == s) continue;
      if (!splits_compatible(s, other)) {
        compatible_with_all = false;
        break;
      }
    }
    if (compatible_with_all) out.push_back(s);
  }
  return out;
}

WeightedSplitSystem::WeightedSplitSystem(SplitSystem system, std::vector<Rational> weights)
    : system_(std::move(system)), weights_(std::move(weights)) {
  if (weights_.size() != system_.splits().size())
    fail(ErrorCode::WeightSystemMismatch, "one weight per split required");
  for (const Rational& w : weights_)
    if (w < 0) fail(ErrorCode::NegativeDistance, "split weights must be nonnegative");

  // Zero-weight nontrivial splits are the same system without those splits.
  std::vector<Split> kept;
  std::vector<Rational> kept_weights;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const Split& s = system_.splits()[i];
    if (!s.trivial_split() && weights_[i] == 0) continue;
    kept.push_back(s);
    kept_weights.push_back(weights_[i]);
  }
  if (kept.size() != system_.splits().size()) {
    system_ = SplitSystem(system_.ambient(), std::move(kept), system_.ordering());
    weights_ = std::move(kept_weights);
  }
}

WeightedSplitSystem WeightedSplitSystem::unit_weights(SplitSystem system) {
  std::vector<Rational> weights(system.splits().size(), Rational(1));
  return WeightedSplitSystem(std::move(system), std::move(weights));
}

const Rational& WeightedSplitSystem::weight_of(const Split& s) const {
  const auto& splits = system_.splits();
  const auto it = std::lower_bound(splits.begin(), splits.end(), s);
  if (it == splits.end() || *it != s)
    fail(ErrorCode::WeightSystemMismatch, "split not present in weighted system");
  return weights_[static_cast<std::size_t>(it - splits.begin())];
}

}  // namespace bmenet
