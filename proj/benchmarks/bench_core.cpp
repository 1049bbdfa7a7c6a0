#include <benchmark/benchmark.h>

#include "bmenet/enumeration.hpp"
#include "bmenet/linalg.hpp"
#include "bmenet/metrics.hpp"
#include "bmenet/optimizer.hpp"
#include "bmenet/polytope.hpp"
#include "bmenet/vectors.hpp"
#include "bmenet/verify.hpp"

using namespace bmenet;

namespace {

void BM_EnumerateNetworks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  long long count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_network(n, k, [&](const Network&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumerateNetworks)->Args({6, 2})->Args({7, 2})->Args({8, 3});

void BM_NetworkVectorClosedForm(benchmark::State& state) {
  InstanceGenerator gen(1);
  const Network net = gen.random_network(7, 3);
  for (auto _ : state) {
    const PairVector x = network_vector(net);
    benchmark::DoNotOptimize(x.values().data());
  }
}
BENCHMARK(BM_NetworkVectorClosedForm);

void BM_NetworkVectorOrbitSum(benchmark::State& state) {
  InstanceGenerator gen(1);
  const Network net = gen.random_network(7, 3);
  for (auto _ : state) {
    const PairVector x = network_vector_by_orbit(net);
    benchmark::DoNotOptimize(x.values().data());
  }
}
BENCHMARK(BM_NetworkVectorOrbitSum);

void BM_Minimize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  InstanceGenerator gen(2);
  const Network net = gen.random_network(n, k);
  const DistanceMatrix d =
      metric_from_splits(gen.random_positive_weights(sigma_splits(net)));
  for (auto _ : state) {
    const OptimizationResult result = minimize(d, n, k);
    benchmark::DoNotOptimize(result.minimum);
  }
}
BENCHMARK(BM_Minimize)->Args({6, 1})->Args({7, 2});

void BM_KalmansonDecompose(benchmark::State& state) {
  InstanceGenerator gen(3);
  SplitSystem system = gen.random_circular_system(9);
  const CircularOrdering witness = *system.ordering();
  const DistanceMatrix d =
      metric_from_splits(gen.random_positive_weights(std::move(system)));
  for (auto _ : state) {
    const WeightedSplitSystem ws = kalmanson_decompose(d, witness);
    benchmark::DoNotOptimize(ws.weights().data());
  }
}
BENCHMARK(BM_KalmansonDecompose);

void BM_AffineDimension(benchmark::State& state) {
  const VertexSet vertices = VertexSet::build(6, 2);
  for (auto _ : state) {
    const int dim = affine_dimension(vertices.vectors);
    benchmark::DoNotOptimize(dim);
  }
}
BENCHMARK(BM_AffineDimension);

}  // namespace

BENCHMARK_MAIN();
