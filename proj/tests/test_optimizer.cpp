#include <doctest.h>

#include "bmenet/error.hpp"
#include "bmenet/optimizer.hpp"
#include "bmenet/verify.hpp"
#include "oracles.hpp"

using namespace bmenet;

namespace {

Network n1() {
  const int part[] = {1, 2};
  return make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}),
                      std::vector{Split(5, part)});
}

}  // namespace

TEST_CASE("minimize recovers the generating network") {
  const WeightedSplitSystem ws = WeightedSplitSystem::unit_weights(sigma_splits(n1()));
  const DistanceMatrix d = metric_from_splits(ws);

  const OptimizationResult at_k1 = minimize(d, 5, 1);
  CHECK(at_k1.minimum == 32);
  CHECK(at_k1.evaluated == 30);
  REQUIRE(at_k1.argmin.size() == 1);
  CHECK(at_k1.argmin.front() == n1());

  const OptimizationResult at_k0 = minimize(d, 5, 0);
  CHECK(at_k0.minimum == 16);
  REQUIRE(at_k0.argmin.size() == 2);  // the two consistent tours
  CHECK(at_k0.argmin[0].ordering().seq() == std::vector{1, 2, 3, 4, 5});
  CHECK(at_k0.argmin[1].ordering().seq() == std::vector{1, 2, 5, 4, 3});

  const DistanceMatrix zero(5);
  const OptimizationResult flat = minimize(zero, 5, 1);
  CHECK(flat.minimum == 0);
  CHECK(flat.argmin.size() == 30);
}

TEST_CASE("tsp slice agrees with the tour scan") {
  InstanceGenerator gen(53);
  for (int n = 4; n <= 7; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      PairVector entries(n);
      for (std::size_t idx = 0; idx < entries.size(); ++idx)
        entries[idx] = Rational(gen.uniform(0, 40), gen.uniform(1, 5));
      const DistanceMatrix d{entries};
      const OptimizationResult got = minimize_tsp(d);
      const oracles::TourScan want = oracles::scan_all_tours(d);
      CHECK(got.minimum == want.best);
      REQUIRE(got.argmin.size() == want.argmin.size());
      for (std::size_t i = 0; i < want.argmin.size(); ++i)
        CHECK(got.argmin[i].ordering().seq() == want.argmin[i]);
    }
  }
  CHECK(minimize_tsp(DistanceMatrix(4)).evaluated == 3);
}

TEST_CASE("tree slice evaluates the (2n-5)!! trees") {
  const DistanceMatrix zero(5);
  const OptimizationResult trees = minimize_bme_tree(zero);
  CHECK(trees.evaluated == 15);
  CHECK(trees.argmin.size() == 15);

  // A unit-weighted tree split system is recovered uniquely.
  InstanceGenerator gen(59);
  const Network tree = gen.random_network(5, 2);
  const WeightedSplitSystem ws = WeightedSplitSystem::unit_weights(sigma_splits(tree));
  const OptimizationResult best = minimize_bme_tree(metric_from_splits(ws));
  REQUIRE(best.argmin.size() == 1);
  CHECK(best.argmin.front() == tree);
}

TEST_CASE("argmin is scale invariant") {
  InstanceGenerator gen(61);
  PairVector entries(5);
  for (std::size_t idx = 0; idx < entries.size(); ++idx)
    entries[idx] = Rational(gen.uniform(1, 30), gen.uniform(1, 4));
  const DistanceMatrix d{entries};
  PairVector scaled_entries = entries;
  for (std::size_t idx = 0; idx < scaled_entries.size(); ++idx)
    scaled_entries[idx] *= Rational(7, 3);
  const DistanceMatrix scaled{scaled_entries};
  const OptimizationResult base = minimize(d, 5, 1);
  const OptimizationResult stretched = minimize(scaled, 5, 1);
  CHECK(base.argmin == stretched.argmin);
  CHECK(stretched.minimum == base.minimum * Rational(7, 3));
}

TEST_CASE("parallel evaluation matches the single-thread result") {
  InstanceGenerator gen(67);
  PairVector entries(6);
  for (std::size_t idx = 0; idx < entries.size(); ++idx)
    entries[idx] = Rational(gen.uniform(0, 25), gen.uniform(1, 6));
  const DistanceMatrix d{entries};
  const OptimizationResult serial = minimize(d, 6, 2, {.jobs = 1});
  const OptimizationResult parallel = minimize(d, 6, 2, {.jobs = 4});
  CHECK(serial.minimum == parallel.minimum);
  CHECK(serial.argmin == parallel.argmin);
  CHECK(serial.evaluated == parallel.evaluated);
}

TEST_CASE("budget and range errors") {
  const DistanceMatrix d(6);
  CHECK_THROWS_WITH_AS((void)minimize(d, 6, 1, {.budget = 100}),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK_THROWS_WITH_AS((void)minimize(d, 6, 4), doctest::Contains("OutOfRange"), Error);
  CHECK_THROWS_WITH_AS((void)minimize(d, 5, 0), doctest::Contains("AmbientMismatch"), Error);
}
