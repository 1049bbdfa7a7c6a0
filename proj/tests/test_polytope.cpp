#include <doctest.h>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/polytope.hpp"
#include "bmenet/vectors.hpp"

using namespace bmenet;

TEST_CASE("rank and affine dimension") {
  std::vector<std::vector<Rational>> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(matrix_rank(rows) == 2);
  CHECK(matrix_rank({}) == 0);

  const VertexSet bme51 = VertexSet::build(5, 1);
  CHECK(affine_dimension(bme51.vectors) == 5);
  const VertexSet stsp5 = VertexSet::build(5, 0);
  CHECK(affine_dimension(stsp5.vectors) == 5);
  CHECK(affine_dimension(std::vector{bme51.vectors.front()}) == 0);
  CHECK_THROWS_AS((void)affine_dimension(std::vector<PairVector>{}), Error);
}

TEST_CASE("degree equalities") {
  const int part[] = {1, 2};
  const Network net =
      make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}),
                   std::vector{Split(5, part)});
  const PairVector x = network_vector(net);
  CHECK(check_degree_equalities(x, 5, 1));
  CHECK(!check_degree_equalities(x, 5, 2));
  const PairVector tour = incidence_vector(net.ordering());
  CHECK(check_degree_equalities(tour, 5, 0));
}

TEST_CASE("split faces") {
  const int ab[] = {1, 2};
  const Split s(5, ab);

  const FaceReport f51 = split_face(5, 1, s);
  CHECK(f51.valid);
  CHECK(f51.tight_count == 9);
  CHECK(f51.tight_affine_dim == 4);
  CHECK(f51.functional.bound == 2);

  const FaceReport f50 = split_face(5, 0, s);
  CHECK(f50.valid);
  CHECK(f50.tight_count == 6);  // tours keeping {1,2} contiguous

  const int abc[] = {1, 2, 3};
  const FaceReport f63 = split_face(6, 3, Split(6, abc));
  CHECK(f63.valid);
  CHECK(f63.tight_count == 9);  // (2m-3)!!(2p-3)!! at m = p = 3

  CHECK_THROWS_WITH_AS((void)split_face(5, 1, Split::trivial(5, 2)),
                       doctest::Contains("TrivialSplit"), Error);
}

TEST_CASE("split faces are tight exactly at displaying networks, n = 6 both parts >= 3") {
  for (int k = 0; k <= 3; ++k) {
    const VertexSet vertices = VertexSet::build(6, k);
    for (std::uint64_t mask = 2; mask < 64; mask += 2) {  // taxon-1-free sides
      if (std::popcount(mask) != 3) continue;
      const Split s = Split::from_mask(6, mask);
      const FaceReport report = split_face(6, k, s, vertices);
      CHECK(report.valid);
      CHECK(report.tight_affine_dim == 8);  // C(6,2) - 6 - 1
      std::vector<Network> displaying;
      for (const Network& net : vertices.networks)
        if (displays_split(net, s)) displaying.push_back(net);
      CHECK(report.tight_vertices == displaying);
    }
  }
}

TEST_CASE("lower bound faces") {
  const FaceReport f51 = lower_bound_face(5, 1, 1, 2);
  CHECK(f51.valid);
  CHECK(f51.tight_count == 9);
  CHECK(f51.functional.bound == 0);

  const FaceReport caterpillar = lower_bound_face(5, 2, 1, 2);
  CHECK(caterpillar.valid);
  CHECK(caterpillar.functional.bound == 1);
  CHECK(caterpillar.tight_count == 6);  // (n-2)!

  const FaceReport f50 = lower_bound_face(5, 0, 1, 2);
  CHECK(f50.valid);
  CHECK(f50.tight_count == 6);  // tours with 1,2 apart
}

TEST_CASE("refinement faces") {
  const int ab[] = {1, 2};
  SplitSystem with_bridge(5, {Split(5, ab)},
                          CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}));
  const FaceReport face = refinement_face(with_bridge, 1);
  CHECK(face.valid);
  CHECK(face.functional.bound == 24);  // 2^2 * W, W = 6
  CHECK(face.tight_count == 9);

  const int part[] = {1, 2};
  const Network n1 =
      make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}),
                   std::vector{Split(5, part)});
  const FaceReport unique_face = refinement_face(sigma_splits(n1), 1);
  CHECK(unique_face.valid);
  CHECK(unique_face.functional.bound == 32);
  REQUIRE(unique_face.tight_count == 1);
  CHECK(unique_face.tight_vertices.front() == n1);

  // Trivial splits alone have no bridges, so only k = 0 applies: the face is
  // the whole polytope.
  const FaceReport everything = refinement_face(SplitSystem::trivial_only(5), 0);
  CHECK(everything.valid);
  CHECK(everything.functional.bound == 10);  // 2^(k+1) n
  CHECK(everything.tight_count == 12);

  CHECK_THROWS_WITH_AS((void)refinement_face(SplitSystem::trivial_only(5), 1,
                                             VertexSet::build(5, 1)),
                       doctest::Contains("TooManyBridgesRequested"), Error);
}

TEST_CASE("nesting identities") {
  CHECK(verify_nesting(5, 1));
  CHECK(verify_nesting(5, 2));
  CHECK(verify_nesting(6, 2));
  CHECK_THROWS_AS((void)verify_nesting(5, 0), Error);
}
