#pragma once

#include <span>
#include <string>
#include <vector>

#include "bmenet/linalg.hpp"
#include "bmenet/network.hpp"
#include "bmenet/pair_vector.hpp"
#include "bmenet/split_system.hpp"

namespace bmenet {

struct LinearFunctional {
  enum class Sense { LessEqual, GreaterEqual };

  PairVector coeffs;
  Rational bound;
  Sense sense = Sense::LessEqual;

  Rational value(const PairVector& x) const { return coeffs.dot(x); }
  bool satisfied_by(const PairVector& x) const;
  bool tight_at(const PairVector& x) const { return value(x) == bound; }
};

struct FaceReport {
  std::string family;  // split | lower | excluded | cyclic | caterpillar | cherry | refinement
  std::string label;
  LinearFunctional functional;
  bool valid = false;                   // every vertex satisfies the inequality
  std::vector<Network> tight_vertices;  // sorted by canonical key
  std::size_t tight_count = 0;
  int tight_affine_dim = -1;            // -1 when the tight set is empty
};

// The vertex set of BME(n,k) with the vector of each vertex, enumerated once
// and reusable across face checks.
struct VertexSet {
  int n = 0, k = 0;
  std::vector<Network> networks;
  std::vector<PairVector> vectors;
  static VertexSet build(int n, int k);
};

FaceReport evaluate_face(std::string family, std::string label, LinearFunctional functional,
                         const VertexSet& vertices);

// True iff all n per-leaf sums of x equal 2^(k+1).
bool check_degree_equalities(const PairVector& x, int n, int k);

// sum_{i,j in A} x_ij <= (|A|-1) 2^k with A the smaller side (ties broken by
// the lexicographically least side); tight exactly at the networks displaying
// the split.
FaceReport split_face(int n, int k, const Split& s);
FaceReport split_face(int n, int k, const Split& s, const VertexSet& vertices);

// x_ij >= 0 for k <= n-4; the caterpillar form x_ij >= 1 at k = n-3.
FaceReport lower_bound_face(int n, int k, int i, int j);
FaceReport lower_bound_face(int n, int k, int i, int j, const VertexSet& vertices);

// x . d_s >= 2^(k+1) W(s) with d_s the unit-weight metric of s; tight exactly
// at the k-bridge networks refining s. Requires k at most the bridge count of
// s.
FaceReport refinement_face(const SplitSystem& s, int k);
FaceReport refinement_face(const SplitSystem& s, int k, const VertexSet& vertices);

// The complete facet description of BME(5,1): 10 split, 10 lower bound,
// 30 excluded node, 12 cyclic order.
std::vector<FaceReport> bme51_facets();

// The known facet families of the tree polytope BME(n, n-3): caterpillar,
// intersecting cherry, and split inequalities (the (m,3)-splits listed per
// 3-element side).
std::vector<FaceReport> bme_tree_facets(int n);

// Checks, over every vertex of BME(n,k): x = x' + x'' for a bridge removal
// (midpoint in the doubled BME(n,k-1)) and x equal to the barycenter of the
// 2^k scaled tour vectors of its consistent orderings.
bool verify_nesting(int n, int k);

}  // namespace bmenet
