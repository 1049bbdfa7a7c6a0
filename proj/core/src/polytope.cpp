#include "bmenet/polytope.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/metrics.hpp"
#include "bmenet/vectors.hpp"

namespace bmenet {

bool LinearFunctional::satisfied_by(const PairVector& x) const {
  const Rational v = value(x);
  return sense == Sense::LessEqual ? v <= bound : v >= bound;
}

VertexSet VertexSet::build(int n, int k) {
  VertexSet set;
  set.n = n;
  set.k = k;
  for_each_network(n, k, [&](const Network& net) {
    set.networks.push_back(net);
    set.vectors.push_back(network_vector(net));
  });
  return set;
}

FaceReport evaluate_face(std::string family, std::string label, LinearFunctional functional,
                         const VertexSet& vertices) {
  FaceReport report;
  report.family = std::move(family);
  report.label = std::move(label);
  report.valid = true;
  std::vector<PairVector> tight_vectors;
  for (std::size_t idx = 0; idx < vertices.networks.size(); ++idx) {
    const PairVector& x = vertices.vectors[idx];
    if (!functional.satisfied_by(x)) report.valid = false;
    if (functional.tight_at(x)) {
      report.tight_vertices.push_back(vertices.networks[idx]);
      tight_vectors.push_back(x);
    }
  }
  report.tight_count = report.tight_vertices.size();
  report.tight_affine_dim = tight_vectors.empty() ? -1 : affine_dimension(tight_vectors);
  report.functional = std::move(functional);
  return report;
}

bool check_degree_equalities(const PairVector& x, int n, int k) {
  const Rational target(pow2(static_cast<unsigned>(k + 1)));
  for (int leaf = 1; leaf <= n; ++leaf)
    if (x.taxon_sum(leaf) != target) return false;
  return true;
}

namespace {

std::string describe_split(const Split& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int t : s.part()) {
    if (!first) out << ",";
    out << t;
    first = false;
  }
  out << "}";
  return out.str();
}

// The side used in the split inequality: the smaller one, ties broken by the
// lexicographically least member list.
std::vector<int> inequality_side(const Split& s) {
  std::vector<int> canonical = s.part();
  std::vector<int> complement;
  for (int t = 1; t <= s.ambient(); ++t)
    if (!s.contains(t)) complement.push_back(t);
  if (canonical.size() != complement.size())
    return canonical.size() < complement.size() ? canonical : complement;
  return canonical < complement ? canonical : complement;
}

LinearFunctional split_functional(int n, int k, const Split& s) {
  const std::vector<int> side = inequality_side(s);
  LinearFunctional f{PairVector(n), Rational((static_cast<int>(side.size()) - 1) *
                                             pow2(static_cast<unsigned>(k))),
                     LinearFunctional::Sense::LessEqual};
  for (std::size_t a = 0; a < side.size(); ++a)
    for (std::size_t b = a + 1; b < side.size(); ++b)
      f.coeffs.at(side[a], side[b]) = 1;
  return f;
}

}  // namespace

FaceReport split_face(int n, int k, const Split& s, const VertexSet& vertices) {
  if (s.trivial_split())
    fail(ErrorCode::TrivialSplit, "split faces need both parts of size >= 2");
  return evaluate_face("split", describe_split(s), split_functional(n, k, s), vertices);
}

FaceReport split_face(int n, int k, const Split& s) {
  return split_face(n, k, s, VertexSet::build(n, k));
}

FaceReport lower_bound_face(int n, int k, int i, int j, const VertexSet& vertices) {
  if (k < 0 || k > n - 3) fail(ErrorCode::OutOfRange, "bridge count must be in 0..n-3");
  LinearFunctional f{PairVector(n), Rational(k == n - 3 ? 1 : 0),
                     LinearFunctional::Sense::GreaterEqual};
  f.coeffs.at(i, j) = 1;
  std::ostringstream label;
  label << "x(" << i << "," << j << ") >= " << (k == n - 3 ? 1 : 0);
  return evaluate_face(k == n - 3 ? "caterpillar" : "lower", label.str(), std::move(f),
                       vertices);
}

FaceReport lower_bound_face(int n, int k, int i, int j) {
  return lower_bound_face(n, k, i, j, VertexSet::build(n, k));
}

FaceReport refinement_face(const SplitSystem& s, int k, const VertexSet& vertices) {
  const int bridge_count = static_cast<int>(s.bridges().size());
  if (k < 0 || k > bridge_count)
    fail(ErrorCode::TooManyBridgesRequested,
         "face exists only for k up to the system's bridge count");
  const WeightedSplitSystem unit = WeightedSplitSystem::unit_weights(s);
  const DistanceMatrix d = metric_from_splits(unit);
  LinearFunctional f{d.entries(),
                     Rational(pow2(static_cast<unsigned>(k + 1))) * total_weight(unit),
                     LinearFunctional::Sense::GreaterEqual};
  std::ostringstream label;
  label << "refinement of " << s.nontrivial().size() << " nontrivial splits, k=" << k;
  return evaluate_face("refinement", label.str(), std::move(f), vertices);
}

FaceReport refinement_face(const SplitSystem& s, int k) {
  return refinement_face(s, k, VertexSet::build(s.ambient(), k));
}

std::vector<FaceReport> bme51_facets() {
  const VertexSet vertices = VertexSet::build(5, 1);
  std::vector<FaceReport> reports;

  // 10 split facets, one per 2|3 split.
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      const int side[] = {a, b};
      reports.push_back(split_face(5, 1, Split(5, side), vertices));
    }

  // 10 lower bound facets x_ij >= 0.
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      reports.push_back(lower_bound_face(5, 1, a, b, vertices));

  // 30 excluded node facets: exclude one taxon, arrange the remaining four in
  // a cyclic order a,b,c,d split into contiguous pairs {a,b} and {c,d};
  // x_ab + x_cd - x_ac - x_bd <= 3.
  for (int excluded = 1; excluded <= 5; ++excluded) {
    std::vector<int> rest;
    for (int t = 1; t <= 5; ++t)
      if (t != excluded) rest.push_back(t);
    // Cyclic orders of four elements, first fixed, reflection-reduced.
    static const int cycles[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (const auto& cycle : cycles) {
      for (int offset = 0; offset < 2; ++offset) {
        const int a = rest[cycle[(0 + offset) % 4]];
        const int b = rest[cycle[(1 + offset) % 4]];
        const int c = rest[cycle[(2 + offset) % 4]];
        const int d = rest[cycle[(3 + offset) % 4]];
        LinearFunctional f{PairVector(5), Rational(3), LinearFunctional::Sense::LessEqual};
        f.coeffs.at(a, b) = 1;
        f.coeffs.at(c, d) = 1;
        f.coeffs.at(a, c) = -1;
        f.coeffs.at(b, d) = -1;
        std::ostringstream label;
        label << "excluded " << excluded << ", cycle " << a << "," << b << ";" << c << ","
              << d;
        reports.push_back(evaluate_face("excluded", label.str(), std::move(f), vertices));
      }
    }
  }

  // 12 cyclic order facets: the incidence functional of each circular
  // ordering, bounded by 8.
  for_each_canonical_ordering(5, [&](const CircularOrdering& c) {
    LinearFunctional f{incidence_vector(c), Rational(8), LinearFunctional::Sense::LessEqual};
    std::ostringstream label;
    label << "cycle";
    for (int t : c.seq()) label << " " << t;
    reports.push_back(evaluate_face("cyclic", label.str(), std::move(f), vertices));
  });

  return reports;
}

std::vector<FaceReport> bme_tree_facets(int n) {
  if (n < 5) fail(ErrorCode::OutOfRange, "tree facet families start at n = 5");
  const int k = n - 3;
  const VertexSet vertices = VertexSet::build(n, k);
  std::vector<FaceReport> reports;

  // Caterpillar facets x_ab >= 1.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      reports.push_back(lower_bound_face(n, k, a, b, vertices));

  // Intersecting-cherry facets x_ab + x_bc - x_ac <= 2^(n-3) for the cherry
  // pair {a,b}, {b,c}.
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c)
      for (int b = 1; b <= n; ++b) {
        if (b == a || b == c) continue;
        LinearFunctional f{PairVector(n), Rational(pow2(static_cast<unsigned>(n - 3))),
                           LinearFunctional::Sense::LessEqual};
        f.coeffs.at(a, b) = 1;
        f.coeffs.at(b, c) = 1;
        f.coeffs.at(a, c) = -1;
        std::ostringstream label;
        label << "cherries {" << a << "," << b << "},{" << b << "," << c << "}";
        reports.push_back(evaluate_face("cherry", label.str(), std::move(f), vertices));
      }

  // Split inequalities over a 3-element side: x_ab + x_bc + x_ac <= 2^(n-2).
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const int side[] = {a, b, c};
        const Split s(n, side);
        LinearFunctional f{PairVector(n), Rational(2) * pow2(static_cast<unsigned>(n - 3)),
                           LinearFunctional::Sense::LessEqual};
        f.coeffs.at(a, b) = 1;
        f.coeffs.at(b, c) = 1;
        f.coeffs.at(a, c) = 1;
        std::ostringstream label;
        label << "split {" << a << "," << b << "," << c << "}";
        reports.push_back(evaluate_face("split", label.str(), std::move(f), vertices));
      }

  // General splits with both parts >= 4 (first occurring at n = 8), by the
  // smaller side.
  if (n >= 8) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const int size = std::popcount(mask);
      if (size < 4 || n - size < 4 || (mask & 1u)) continue;
      if (size > n - size) continue;  // one representative per split
      const Split s = Split::from_mask(n, mask);
      reports.push_back(split_face(n, k, s, vertices));
    }
  }

  return reports;
}

bool verify_nesting(int n, int k) {
  if (k < 1 || k > n - 3)
    fail(ErrorCode::OutOfRange, "nesting compares BME(n,k) against BME(n,k-1)");
  bool ok = true;
  for_each_network(n, k, [&](const Network& net) {
    if (!ok) return;
    const PairVector x = network_vector(net);
    // Midpoint in the doubled lower polytope, via each bridge removal.
    for (const Split& bridge : net.bridges()) {
      const auto [first, second] = twist_decompose(net, bridge);
      if (!(network_vector(first) + network_vector(second) == x)) {
        ok = false;
        return;
      }
    }
    // Barycenter of the 2^k scaled tour vectors.
    const auto orderings = consistent_orderings(net);
    if (orderings.size() != (std::size_t{1} << k)) {
      ok = false;
      return;
    }
    PairVector barycenter(n);
    const Rational scale = Rational(pow2(static_cast<unsigned>(k)));
    for (const CircularOrdering& c : orderings) {
      const PairVector tour = incidence_vector(c);
      for (std::size_t idx = 0; idx < barycenter.size(); ++idx)
        barycenter[idx] += scale * tour[idx];
    }
    for (std::size_t idx = 0; idx < barycenter.size(); ++idx)
      barycenter[idx] /= scale;
    if (!(barycenter == x)) ok = false;
  });
  return ok;
}

}  // namespace bmenet
