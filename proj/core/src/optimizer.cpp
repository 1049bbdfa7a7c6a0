#include "bmenet/optimizer.hpp"

#include <algorithm>
#include <thread>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/subdivision.hpp"
#include "bmenet/vectors.hpp"

namespace bmenet {

namespace {

struct PartialResult {
  bool any = false;
  Int best;  // numerator of the length over the shared denominator
  std::vector<Network> argmin;
  long long evaluated = 0;

  void offer(const Network& net, Int value) {
    ++evaluated;
    if (!any || value < best) {
      any = true;
      best = std::move(value);
      argmin.clear();
      argmin.push_back(net);
    } else if (value == best) {
      argmin.push_back(net);
    }
  }
};

// Scaled integer numerators of d over one common denominator, so the inner
// loop compares integers only.
struct ScaledMatrix {
  std::vector<Int> numerators;
  Int denominator = 1;

  explicit ScaledMatrix(const DistanceMatrix& d) {
    for (const Rational& v : d.entries().values())
      denominator = boost::multiprecision::lcm(
          denominator, boost::multiprecision::denominator(v));
    numerators.reserve(d.entries().size());
    for (const Rational& v : d.entries().values())
      numerators.push_back(boost::multiprecision::numerator(v) *
                           (denominator / boost::multiprecision::denominator(v)));
  }
};

Int scaled_length(const Network& net, const ScaledMatrix& scaled) {
  const int n = net.ambient();
  const PolygonSubdivision sub = PolygonSubdivision::build(net);
  Int total = 0;
  std::size_t idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++idx) {
      const std::int64_t entry = network_vector_entry(net, sub, i, j);
      if (entry != 0) total += entry * scaled.numerators[idx];
    }
  return total;
}

void run_block(std::span<const CircularOrdering> orderings, int k,
               const ScaledMatrix& scaled, PartialResult& out) {
  for_each_network_in_block(orderings, k, [&](const Network& net) {
    out.offer(net, scaled_length(net, scaled));
  });
}

}  // namespace

OptimizationResult minimize(const DistanceMatrix& d, int n, int k,
                            const MinimizeOptions& options) {
  if (d.ambient() != n)
    fail(ErrorCode::AmbientMismatch, "matrix size differs from requested taxon count");
  if (n < 3 || k < 0 || k > n - 3)
    fail(ErrorCode::OutOfRange, "bridge count must be in 0..n-3");
  const Int count = network_count(n, k);
  if (count > options.budget)
    fail(ErrorCode::BudgetExceeded,
         "vertex count " + count.str() + " exceeds budget " + options.budget.str());

  const ScaledMatrix scaled(d);
  const auto orderings = canonical_orderings(n);
  const int jobs = std::max(1, options.jobs);

  std::vector<PartialResult> partials;
  if (jobs == 1 || orderings.size() < 2 * static_cast<std::size_t>(jobs)) {
    partials.emplace_back();
    run_block(orderings, k, scaled, partials.back());
  } else {
    partials.resize(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    const std::size_t per_job = (orderings.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::size_t begin = std::min(orderings.size(), w * per_job);
      const std::size_t end = std::min(orderings.size(), begin + per_job);
      workers.emplace_back([&, begin, end, w] {
        run_block(std::span(orderings).subspan(begin, end - begin), k, scaled,
                  partials[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  OptimizationResult result;
  result.evaluated = 0;
  bool any = false;
  Int best;
  for (PartialResult& partial : partials) {
    result.evaluated += partial.evaluated;
    if (!partial.any) continue;
    if (!any || partial.best < best) {
      any = true;
      best = partial.best;
      result.argmin = std::move(partial.argmin);
    } else if (partial.best == best) {
      result.argmin.insert(result.argmin.end(),
                           std::make_move_iterator(partial.argmin.begin()),
                           std::make_move_iterator(partial.argmin.end()));
    }
  }
  std::sort(result.argmin.begin(), result.argmin.end());
  result.minimum = Rational(best, scaled.denominator);
  return result;
}

OptimizationResult minimize_tsp(const DistanceMatrix& d, const MinimizeOptions& options) {
  return minimize(d, d.ambient(), 0, options);
}

OptimizationResult minimize_bme_tree(const DistanceMatrix& d, const MinimizeOptions& options) {
  return minimize(d, d.ambient(), d.ambient() - 3, options);
}

}  // namespace bmenet
