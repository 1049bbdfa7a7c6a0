#pragma once

#include <string>
#include <vector>

#include "bmenet/io.hpp"

namespace bmenet {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  Json artifacts = Json::object();

  bool pass() const;
};

struct VerifyOptions {
  int max_n = 0;        // 0 = suite default
  int trials = 0;       // 0 = suite default
  unsigned seed = 7;    // suites are deterministic for a fixed seed
  bool hull = false;    // facets51: also run the basic-solution completeness scan
  int jobs = 1;
};

// Suites: equalities (vertex-vector identity, component and degree sums,
// affine dimensions), facets51 (the 62 facets of BME(5,1)), table1 (tree
// facet families), nesting (twist decomposition, orbit partition,
// barycenters), faces (refinement faces against the optimizer), recovery
// (weighted-system reconstruction through minimization).
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

// Random instances shared by the randomized suites; deterministic in (seed,
// sequence of calls).
class InstanceGenerator {
 public:
  explicit InstanceGenerator(unsigned seed) : state_(seed) {}

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  Rational positive_rational();
  CircularOrdering random_ordering(int n);
  Network random_network(int n, int k);
  // Random circular split system with witness: each nontrivial arc split is
  // included independently; trivial splits always.
  SplitSystem random_circular_system(int n);
  // Positive weights on every split of the system.
  WeightedSplitSystem random_positive_weights(SplitSystem system);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace bmenet
