#pragma once

#include <vector>

#include "bmenet/metrics.hpp"
#include "bmenet/network.hpp"
#include "bmenet/rational.hpp"

namespace bmenet {

struct OptimizationResult {
  Rational minimum;
  std::vector<Network> argmin;  // every attaining network, sorted by canonical key
  Int evaluated;                // = v(n,k)
};

struct MinimizeOptions {
  Int budget = 10'000'000;  // maximum vertex evaluations
  int jobs = 1;             // worker threads; the result does not depend on this
};

// Exact global minimum of x(net) . d over all binary level-1 networks with n
// leaves and k bridges, by exhaustive vertex evaluation.
OptimizationResult minimize(const DistanceMatrix& d, int n, int k,
                            const MinimizeOptions& options = {});

// The k = 0 slice: symmetric TSP over the (n-1)!/2 tours.
OptimizationResult minimize_tsp(const DistanceMatrix& d, const MinimizeOptions& options = {});

// The k = n-3 slice: balanced minimum evolution over the (2n-5)!! trees.
OptimizationResult minimize_bme_tree(const DistanceMatrix& d,
                                     const MinimizeOptions& options = {});

}  // namespace bmenet
