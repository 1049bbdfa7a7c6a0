#include "bmenet/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bmenet/error.hpp"
#include "bmenet/linalg.hpp"
#include "bmenet/vectors.hpp"

namespace bmenet {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::uint64_t InstanceGenerator::next() {
  // splitmix64: deterministic across platforms.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int InstanceGenerator::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational InstanceGenerator::positive_rational() {
  return Rational(uniform(1, 12), uniform(1, 8));
}

CircularOrdering InstanceGenerator::random_ordering(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 1; --i)
    std::swap(seq[static_cast<std::size_t>(i)],
              seq[static_cast<std::size_t>(uniform(1, i))]);
  return CircularOrdering::from_permutation_unchecked(seq);
}

Network InstanceGenerator::random_network(int n, int k) {
  const CircularOrdering c = random_ordering(n);
  const auto sets = enumerate_diagonal_sets(n, k);
  const DiagonalSet& set = sets[static_cast<std::size_t>(
      uniform(0, static_cast<int>(sets.size()) - 1))];
  std::vector<Split> bridges;
  for (const auto& [a, b] : set) {
    std::vector<int> members;
    for (int p = a; p <= b; ++p) members.push_back(c.seq()[static_cast<std::size_t>(p)]);
    bridges.emplace_back(n, members);
  }
  return make_network(c, bridges);
}

SplitSystem InstanceGenerator::random_circular_system(int n) {
  const CircularOrdering c = random_ordering(n);
  std::vector<Split> chosen;
  for (const Split& s : nontrivial_arc_splits(c))
    if (uniform(0, 4) < 2) chosen.push_back(s);
  return SplitSystem(n, std::move(chosen), c);
}

WeightedSplitSystem InstanceGenerator::random_positive_weights(SplitSystem system) {
  std::vector<Rational> weights;
  weights.reserve(system.splits().size());
  for (std::size_t i = 0; i < system.splits().size(); ++i)
    weights.push_back(positive_rational());
  return WeightedSplitSystem(std::move(system), std::move(weights));
}

namespace {

std::string key_of(const PairVector& x) {
  std::string key;
  for (const Rational& v : x.values()) {
    key += rational_to_string(v);
    key += ',';
  }
  return key;
}

std::string key_of(const Network& net) {
  std::string key;
  for (int t : net.ordering().seq()) {
    key += std::to_string(t);
    key += '.';
  }
  for (const auto& [a, b] : net.bridge_intervals())
    key += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return key;
}

CheckResult make_check(std::string name, bool pass, std::string detail = "") {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

// ---------------------------------------------------------------- equalities

SuiteResult suite_equalities(const VerifyOptions& options) {
  SuiteResult result{"equalities", {}, Json::object()};
  const int max_n = options.max_n > 0 ? options.max_n : 7;
  for (int n = 3; n <= max_n; ++n) {
    bool identity_ok = true, sums_ok = true, injective_ok = true;
    long long total = 0;
    std::string detail;
    for (int k = 0; k <= n - 3; ++k) {
      std::vector<std::string> keys;
      const Rational component_target(Int(n) * pow2(static_cast<unsigned>(k)));
      for_each_network(n, k, [&](const Network& net) {
        ++total;
        const PairVector closed = network_vector(net);
        if (!(closed == network_vector_by_orbit(net))) identity_ok = false;
        if (closed.component_sum() != component_target) sums_ok = false;
        if (!check_degree_equalities(closed, n, k)) sums_ok = false;
        keys.push_back(key_of(closed));
      });
      std::sort(keys.begin(), keys.end());
      if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) injective_ok = false;
    }
    detail = std::to_string(total) + " networks";
    result.checks.push_back(
        make_check("n=" + std::to_string(n) + " closed form equals orbit sum", identity_ok,
                   detail));
    result.checks.push_back(make_check(
        "n=" + std::to_string(n) + " component and degree sums", sums_ok, detail));
    result.checks.push_back(make_check(
        "n=" + std::to_string(n) + " vectors pairwise distinct", injective_ok, detail));
  }
  for (int n = 5; n <= std::min(6, max_n); ++n) {
    const int expected = n * (n - 1) / 2 - n;
    for (int k = 0; k <= n - 3; ++k) {
      const VertexSet vertices = VertexSet::build(n, k);
      const int dim = affine_dimension(vertices.vectors);
      result.checks.push_back(make_check(
          "dim BME(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
              std::to_string(expected),
          dim == expected, "got " + std::to_string(dim)));
    }
  }
  return result;
}

// ------------------------------------------------------------------ facets51

struct HullOutcome {
  bool pass = false;
  std::string detail;
};

// Enumerates the basic solutions of the 62 facet inequalities restricted to
// the affine hull (the five degree equalities) and compares the feasible ones
// with the vertex set.
HullOutcome hull_completeness(const VertexSet& vertices,
                              const std::vector<FaceReport>& facets) {
  constexpr int kVars = 10;
  // Degree equalities as a rational system.
  std::vector<std::vector<Rational>> eq(5, std::vector<Rational>(kVars, Rational(0)));
  std::vector<Rational> eq_rhs(5, Rational(4));
  for (int leaf = 1; leaf <= 5; ++leaf)
    for (int other = 1; other <= 5; ++other)
      if (other != leaf)
        eq[static_cast<std::size_t>(leaf - 1)][PairVector::index_of(5, leaf, other)] = 1;

  // Gauss-Jordan to a particular solution and a nullspace basis.
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < kVars && row < eq.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < eq.size() && eq[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == eq.size()) continue;
    std::swap(eq[row], eq[pivot]);
    std::swap(eq_rhs[row], eq_rhs[pivot]);
    const Rational lead = eq[row][static_cast<std::size_t>(col)];
    for (int c = 0; c < kVars; ++c) eq[row][static_cast<std::size_t>(c)] /= lead;
    eq_rhs[row] /= lead;
    for (std::size_t r = 0; r < eq.size(); ++r) {
      if (r == row) continue;
      const Rational factor = eq[r][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = 0; c < kVars; ++c)
        eq[r][static_cast<std::size_t>(c)] -= factor * eq[row][static_cast<std::size_t>(c)];
      eq_rhs[r] -= factor * eq_rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  const std::size_t rank = row;
  std::vector<bool> is_pivot(kVars, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Rational> x0(kVars, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x0[static_cast<std::size_t>(pivot_col[r])] = eq_rhs[r];
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < kVars; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(kVars, Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = -eq[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  const std::size_t dims = basis.size();  // 5

  // Facet rows in parameter space, denominators cleared.
  std::vector<std::vector<Int>> rows;
  for (const FaceReport& facet : facets) {
    std::vector<Rational> trow(dims + 1);
    for (std::size_t t = 0; t < dims; ++t) {
      Rational dot = 0;
      for (int c = 0; c < kVars; ++c)
        dot += facet.functional.coeffs[static_cast<std::size_t>(c)] *
               basis[t][static_cast<std::size_t>(c)];
      trow[t] = dot;
    }
    Rational shift = facet.functional.bound;
    for (int c = 0; c < kVars; ++c)
      shift -= facet.functional.coeffs[static_cast<std::size_t>(c)] *
               x0[static_cast<std::size_t>(c)];
    trow[dims] = shift;
    Int common = 1;
    for (const Rational& v : trow)
      common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(v));
    std::vector<Int> irow;
    for (const Rational& v : trow)
      irow.push_back(boost::multiprecision::numerator(v) *
                     (common / boost::multiprecision::denominator(v)));
    rows.push_back(std::move(irow));
  }

  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> feasible;
  IntEliminator eliminator(dims);
  long long bases = 0;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (eliminator.rank() == static_cast<int>(dims)) {
      ++bases;
      const std::vector<Rational> t = eliminator.solve();
      std::vector<Rational> x = x0;
      for (std::size_t b = 0; b < dims; ++b)
        for (int c = 0; c < kVars; ++c)
          x[static_cast<std::size_t>(c)] += t[b] * basis[b][static_cast<std::size_t>(c)];
      if (!seen.insert(x).second) return;
      bool ok = true;
      PairVector candidate(5);
      for (int c = 0; c < kVars; ++c) candidate[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)];
      for (const FaceReport& facet : facets)
        if (!facet.functional.satisfied_by(candidate)) {
          ok = false;
          break;
        }
      if (ok) feasible.push_back(std::move(x));
      return;
    }
    for (std::size_t idx = start; idx < rows.size(); ++idx) {
      if (!eliminator.add_row(rows[idx])) continue;
      self(self, idx + 1);
      eliminator.pop_row();
    }
  };
  dfs(dfs, 0);

  std::set<std::string> vertex_keys;
  for (const PairVector& x : vertices.vectors) vertex_keys.insert(key_of(x));
  std::set<std::string> found_keys;
  for (const auto& x : feasible) {
    PairVector v(5);
    for (int c = 0; c < kVars; ++c) v[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)];
    found_keys.insert(key_of(v));
  }
  HullOutcome outcome;
  outcome.pass = found_keys == vertex_keys;
  outcome.detail = std::to_string(found_keys.size()) + " feasible basic points from " +
                   std::to_string(bases) + " bases";
  return outcome;
}

SuiteResult suite_facets51(const VerifyOptions& options) {
  SuiteResult result{"facets51", {}, Json::object()};
  const VertexSet vertices = VertexSet::build(5, 1);
  const std::vector<FaceReport> reports = bme51_facets();

  std::map<std::string, int> family_count;
  std::map<std::string, std::size_t> expected_tight{
      {"split", 9}, {"lower", 9}, {"excluded", 8}, {"cyclic", 5}};
  bool valid_ok = true, tight_ok = true, dim_ok = true;
  for (const FaceReport& report : reports) {
    ++family_count[report.family];
    if (!report.valid) valid_ok = false;
    if (report.tight_count != expected_tight[report.family]) tight_ok = false;
    if (report.tight_affine_dim != 4) dim_ok = false;
  }
  result.checks.push_back(make_check(
      "62 facets: 10 split, 10 lower, 30 excluded, 12 cyclic",
      reports.size() == 62 && family_count["split"] == 10 && family_count["lower"] == 10 &&
          family_count["excluded"] == 30 && family_count["cyclic"] == 12));
  result.checks.push_back(
      make_check("all inequalities valid on the 30 vertices", valid_ok));
  result.checks.push_back(make_check("tight counts 9/9/8/5 by family", tight_ok));
  result.checks.push_back(make_check("every tight set has affine dimension 4", dim_ok));

  std::set<std::string> tight_sets;
  for (const FaceReport& report : reports) {
    std::string key;
    for (const Network& net : report.tight_vertices) key += key_of(net) + "|";
    tight_sets.insert(key);
  }
  result.checks.push_back(make_check("the 62 tight sets are pairwise distinct",
                                     tight_sets.size() == reports.size()));

  // Split facets are tight exactly at the displaying networks.
  bool split_sets_ok = true;
  for (const FaceReport& report : reports) {
    if (report.family != "split") continue;
    // Recover the split from the two taxa whose pair coefficient is 1.
    std::vector<int> side;
    for (int i = 1; i <= 5 && side.size() < 2; ++i)
      for (int j = i + 1; j <= 5; ++j)
        if (report.functional.coeffs.at(i, j) == 1) {
          side = {i, j};
          break;
        }
    const Split s(5, side);
    std::vector<Network> displaying;
    for (std::size_t idx = 0; idx < vertices.networks.size(); ++idx)
      if (displays_split(vertices.networks[idx], s))
        displaying.push_back(vertices.networks[idx]);
    if (!(displaying == report.tight_vertices)) split_sets_ok = false;
  }
  result.checks.push_back(
      make_check("split facets tight exactly at displaying networks", split_sets_ok));

  if (options.hull) {
    const HullOutcome outcome = hull_completeness(vertices, reports);
    result.checks.push_back(make_check(
        "basic solutions of 62 facets + 5 equalities = 30 vertices", outcome.pass,
        outcome.detail));
  }

  Json artifact_reports = Json::array();
  for (const FaceReport& report : reports) artifact_reports.push_back(to_json(report));
  result.artifacts["reports"] = std::move(artifact_reports);
  return result;
}

// -------------------------------------------------------------------- table1

SuiteResult suite_table1(const VerifyOptions& options) {
  SuiteResult result{"table1", {}, Json::object()};
  const int max_n = options.max_n > 0 ? options.max_n : 6;
  Json artifact_reports = Json::array();
  for (int n = 5; n <= std::min(6, max_n); ++n) {
    const int facet_dim = n * (n - 1) / 2 - n - 1;
    const auto reports = bme_tree_facets(n);
    const Int caterpillar_tight = factorial(static_cast<unsigned>(n - 2));
    const Int cherry_tight = 2 * double_factorial(2 * n - 7);
    const Int split3_tight = 3 * double_factorial(2 * n - 9);
    std::map<std::string, int> family_count;
    bool valid_ok = true, caterpillar_ok = true, cherry_ok = true, split_ok = true,
         dims_ok = true;
    for (const FaceReport& report : reports) {
      ++family_count[report.family];
      if (!report.valid) valid_ok = false;
      const Int tight(report.tight_count);
      if (report.family == "caterpillar") {
        if (tight != caterpillar_tight) caterpillar_ok = false;
        if (report.tight_affine_dim != facet_dim) dims_ok = false;
      } else if (report.family == "cherry") {
        if (tight != cherry_tight) cherry_ok = false;
        if (report.tight_affine_dim != facet_dim) dims_ok = false;
      } else if (report.family == "split") {
        if (tight != split3_tight) split_ok = false;
        // Facet dimension is claimed only with both parts >= 3.
        if (n >= 6 && report.tight_affine_dim != facet_dim) dims_ok = false;
      }
      artifact_reports.push_back(to_json(report));
    }
    const std::string tag = "n=" + std::to_string(n) + " ";
    result.checks.push_back(make_check(tag + "all families valid", valid_ok));
    result.checks.push_back(make_check(
        tag + "caterpillar tight = (n-2)! (" + caterpillar_tight.str() + ")",
        caterpillar_ok && family_count["caterpillar"] == n * (n - 1) / 2));
    result.checks.push_back(make_check(
        tag + "cherry tight = 2(2n-7)!! (" + cherry_tight.str() + ")",
        cherry_ok && family_count["cherry"] == n * (n - 1) / 2 * (n - 2)));
    result.checks.push_back(make_check(
        tag + "3-side split tight = 3(2n-9)!! (" + split3_tight.str() + ")",
        split_ok && family_count["split"] == n * (n - 1) * (n - 2) / 6));
    result.checks.push_back(
        make_check(tag + "facet families have dimension " + std::to_string(facet_dim),
                   dims_ok));
  }
  result.artifacts["reports"] = std::move(artifact_reports);
  return result;
}

// ------------------------------------------------------------------- nesting

SuiteResult suite_nesting(const VerifyOptions& options) {
  SuiteResult result{"nesting", {}, Json::object()};
  const int max_n = options.max_n > 0 ? options.max_n : 6;
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      bool partition_ok = true;
      long long networks = 0;
      for_each_network(n, k, [&](const Network& net) {
        ++networks;
        if (!partition_ok) return;
        const auto whole = consistent_orderings(net);
        for (const Split& bridge : net.bridges()) {
          const auto [first, second] = twist_decompose(net, bridge);
          auto left = consistent_orderings(first);
          auto right = consistent_orderings(second);
          std::vector<CircularOrdering> merged;
          std::merge(left.begin(), left.end(), right.begin(), right.end(),
                     std::back_inserter(merged));
          if (merged.size() != whole.size() ||
              !std::equal(merged.begin(), merged.end(), whole.begin()) ||
              std::adjacent_find(merged.begin(), merged.end()) != merged.end()) {
            partition_ok = false;
            return;
          }
        }
      });
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      result.checks.push_back(make_check(
          tag + " x = x' + x'' and barycenter identities", verify_nesting(n, k),
          std::to_string(networks) + " networks"));
      result.checks.push_back(
          make_check(tag + " sub-orbits partition the twist orbit", partition_ok));
    }
  }
  return result;
}

// --------------------------------------------------------------------- faces

SuiteResult suite_faces(const VerifyOptions& options) {
  SuiteResult result{"faces", {}, Json::object()};
  const int max_n = options.max_n > 0 ? options.max_n : 6;
  const int trials = options.trials > 0 ? options.trials : 10;
  InstanceGenerator gen(options.seed);
  for (int n = 4; n <= max_n; ++n) {
    bool ok = true;
    std::string failure;
    std::map<int, VertexSet> cache;
    long long faces_checked = 0;
    for (int trial = 0; trial < trials && ok; ++trial) {
      const SplitSystem system = gen.random_circular_system(n);
      const WeightedSplitSystem unit = WeightedSplitSystem::unit_weights(system);
      const DistanceMatrix d = metric_from_splits(unit);
      const Rational total = total_weight(unit);
      const int bridge_count = static_cast<int>(system.bridges().size());
      for (int k = 0; k <= std::min(bridge_count, n - 3) && ok; ++k) {
        auto [it, inserted] = cache.try_emplace(k);
        if (inserted) it->second = VertexSet::build(n, k);
        const VertexSet& vertices = it->second;

        const FaceReport report = refinement_face(system, k, vertices);
        std::vector<Network> refining;
        for (const Network& net : vertices.networks)
          if (refines(net, system)) refining.push_back(net);

        const Rational bound = Rational(pow2(static_cast<unsigned>(k + 1))) * total;
        ++faces_checked;
        if (!report.valid || report.functional.bound != bound ||
            !(report.tight_vertices == refining)) {
          ok = false;
          failure = "face mismatch at trial " + std::to_string(trial) +
                    ", k=" + std::to_string(k);
          break;
        }
        const OptimizationResult opt = minimize(d, n, k, {.jobs = options.jobs});
        if (!(opt.argmin == refining) || opt.minimum != bound) {
          ok = false;
          failure = "argmin mismatch at trial " + std::to_string(trial) +
                    ", k=" + std::to_string(k);
        }
      }
    }
    result.checks.push_back(make_check(
        "n=" + std::to_string(n) + " refinement faces = optimizer argmin", ok,
        ok ? std::to_string(faces_checked) + " faces" : failure));
  }
  return result;
}

// ------------------------------------------------------------------ recovery

SuiteResult suite_recovery(const VerifyOptions& options) {
  SuiteResult result{"recovery", {}, Json::object()};
  const int max_n = options.max_n > 0 ? options.max_n : 7;
  const int trials = options.trials > 0 ? options.trials : 25;
  InstanceGenerator gen(options.seed);
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      bool ok = true;
      std::string failure;
      for (int trial = 0; trial < trials && ok; ++trial) {
        const Network target = gen.random_network(n, k);
        const WeightedSplitSystem ws = gen.random_positive_weights(sigma_splits(target));
        const DistanceMatrix d = metric_from_splits(ws);
        const Rational expected =
            Rational(pow2(static_cast<unsigned>(k + 1))) * total_weight(ws);
        const OptimizationResult opt = minimize(d, n, k, {.jobs = options.jobs});
        if (opt.argmin.size() != 1 || !(opt.argmin.front() == target) ||
            opt.minimum != expected) {
          ok = false;
          failure = "trial " + std::to_string(trial);
        }
      }
      result.checks.push_back(make_check(
          "(" + std::to_string(n) + "," + std::to_string(k) +
              ") unique recovery at 2^(k+1) W",
          ok, ok ? std::to_string(trials) + " trials" : failure));
    }
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"equalities", "facets51", "table1",
                                              "nesting",    "faces",    "recovery"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "equalities") return suite_equalities(options);
  if (name == "facets51") return suite_facets51(options);
  if (name == "table1") return suite_table1(options);
  if (name == "nesting") return suite_nesting(options);
  if (name == "faces") return suite_faces(options);
  if (name == "recovery") return suite_recovery(options);
  fail(ErrorCode::OutOfRange, "unknown suite '" + name + "'");
}

}  // namespace bmenet
