#include <doctest.h>

#include <set>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"
#include "bmenet/graph.hpp"
#include "bmenet/io.hpp"
#include "bmenet/network.hpp"
#include "bmenet/subdivision.hpp"
#include "oracles.hpp"

using namespace bmenet;

namespace {

Network n1() {
  const int part[] = {1, 2};
  const Split bridge(5, part);
  return make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}),
                      std::vector{bridge});
}

Network caterpillar5() {
  const int left[] = {1, 2};
  const int right[] = {4, 5};
  const std::vector<Split> bridges{Split(5, left), Split(5, right)};
  return make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}), bridges);
}

}  // namespace

TEST_CASE("circular ordering canonical form") {
  CHECK(CircularOrdering::canonicalize(std::vector{3, 1, 2}).seq() == std::vector{1, 2, 3});
  CHECK(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}).seq() ==
        std::vector{1, 2, 3, 4, 5});
  CHECK(CircularOrdering::canonicalize(std::vector{5, 4, 3, 2, 1}).seq() ==
        std::vector{1, 2, 3, 4, 5});
  CHECK_THROWS_AS((void)CircularOrdering::canonicalize(std::vector{1, 2, 2, 4}), Error);
  CHECK_THROWS_AS((void)CircularOrdering::canonicalize(std::vector{1, 2, 7}), Error);

  SUBCASE("agrees with the full symmetry scan and is idempotent") {
    std::vector<int> seq{4, 1, 6, 3, 2, 5};
    do {
      const auto canonical = CircularOrdering::canonicalize(seq).seq();
      CHECK(canonical == oracles::cyclic_class_min(seq));
      CHECK(CircularOrdering::canonicalize(canonical).seq() == canonical);
    } while (std::next_permutation(seq.begin(), seq.end()) && seq[0] < 5);
  }
}

TEST_CASE("split canonical side and compatibility") {
  const int ab[] = {1, 2};
  const Split s(5, ab);
  CHECK(s.part() == std::vector{3, 4, 5});  // side without taxon 1
  CHECK(!s.trivial_split());
  CHECK(Split::trivial(5, 3).part() == std::vector{3});
  CHECK(Split::trivial(5, 1).trivial_split());

  const int cd[] = {4, 5};
  const int bc[] = {2, 3};
  CHECK(splits_compatible(s, Split(5, cd)));
  CHECK(!splits_compatible(s, Split(5, bc)));
  CHECK(splits_compatible(s, s));
  CHECK_THROWS_AS((void)splits_compatible(s, Split(6, ab)), Error);
}

TEST_CASE("arcs of an ordering") {
  const auto c = CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5});
  const int fg[] = {4, 5};
  const int gh[] = {3, 5};
  CHECK(is_arc(Split(5, fg), c));
  CHECK(!is_arc(Split(5, gh), c));
  const auto c2 = CircularOrdering::canonicalize(std::vector{2, 1, 3, 4, 5});
  const int bc[] = {2, 3};
  CHECK(!is_arc(Split(5, bc), c2));
  // Wrapping arcs count: {1,5} sits across the seam of (1,2,3,4,5).
  const int wrap[] = {1, 5};
  CHECK(is_arc(Split(5, wrap), c));

  CHECK(nontrivial_arc_splits(c).size() == 5);  // n(n-3)/2
}

TEST_CASE("make_network canonicalizes the twist class") {
  const Network net = n1();
  CHECK(net.ordering().seq() == std::vector{1, 2, 3, 4, 5});
  CHECK(net.bridge_count() == 1);

  // Any member of the twist class gives the same value.
  const int part[] = {1, 2};
  const Split bridge(5, part);
  const Network other = make_network(
      CircularOrdering::canonicalize(std::vector{2, 1, 3, 4, 5}), std::vector{bridge});
  CHECK(net == other);

  const Network tour =
      make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}), {});
  CHECK(tour.bridge_count() == 0);

  const int bc[] = {2, 3};
  CHECK_THROWS_WITH_AS(
      (void)make_network(net.ordering(), std::vector{bridge, Split(5, bc)}),
      doctest::Contains("CrossingBridges"), Error);
  CHECK_THROWS_WITH_AS((void)make_network(net.ordering(), std::vector{Split::trivial(5, 2)}),
                       doctest::Contains("TrivialBridge"), Error);
  const int arcless[] = {3, 5};
  CHECK_THROWS_WITH_AS((void)make_network(net.ordering(), std::vector{Split(5, arcless)}),
                       doctest::Contains("NotAnArc"), Error);
}

TEST_CASE("too many bridges is rejected") {
  const auto c = CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5});
  const int a[] = {2, 3};
  const int b[] = {2, 3, 4};
  const int d[] = {4, 5};
  // Three pairwise-compatible diagonals on a pentagon exceed n-3 = 2.
  CHECK_THROWS_WITH_AS(
      (void)make_network(c, std::vector{Split(5, a), Split(5, b), Split(5, d)}),
      doctest::Contains("TooManyBridges"), Error);
}

TEST_CASE("twist drawing matches the reflected picture") {
  const Network net = n1();
  const int part[] = {1, 2};
  const Split bridge(5, part);
  std::vector<int> drawing = twist_drawing(net, bridge);
  CHECK(drawing == std::vector{2, 1, 3, 4, 5});
  // Reversing the same block again restores the drawing.
  detail::reverse_cyclic_block(drawing, 0b00011);
  CHECK(drawing == net.ordering().seq());

  const Network tour = make_network(net.ordering(), {});
  CHECK_THROWS_WITH_AS((void)twist_drawing(tour, bridge), doctest::Contains("NotABridge"),
                       Error);
}

TEST_CASE("consistent orderings are the twist orbit") {
  const Network net = n1();
  const auto orbit = consistent_orderings(net);
  REQUIRE(orbit.size() == 2);
  CHECK(orbit[0].seq() == std::vector{1, 2, 3, 4, 5});
  CHECK(orbit[1].seq() == std::vector{1, 2, 5, 4, 3});

  CHECK(consistent_orderings(make_network(net.ordering(), {})).size() == 1);
  CHECK(consistent_orderings(caterpillar5()).size() == 4);

  SUBCASE("always exactly 2^k distinct orderings, n <= 6") {
    for (int n = 4; n <= 6; ++n)
      for (int k = 0; k <= n - 3; ++k)
        for_each_network(n, k, [&](const Network& candidate) {
          const auto all = consistent_orderings(candidate);
          CHECK(all.size() == (std::size_t{1} << k));
          CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        });
  }
}

TEST_CASE("displayed splits and sigma") {
  const Network net = n1();
  const int fg[] = {4, 5};
  const int bc[] = {2, 3};
  CHECK(displays_split(net, Split(5, fg)));
  CHECK(!displays_split(net, Split(5, bc)));
  CHECK(displays_split(net, Split::trivial(5, 4)));

  const SplitSystem sigma = sigma_splits(net);
  const auto nontrivial = sigma.nontrivial();
  REQUIRE(nontrivial.size() == 3);
  CHECK(nontrivial[0].part() == std::vector{3, 4});
  CHECK(nontrivial[1].part() == std::vector{3, 4, 5});
  CHECK(nontrivial[2].part() == std::vector{4, 5});

  // k = 0: every arc split; binary tree: the 2n-3 tree splits.
  const Network tour = make_network(net.ordering(), {});
  CHECK(sigma_splits(tour).splits().size() == 5 + 5);
  CHECK(sigma_splits(caterpillar5()).splits().size() == 2 * 5 - 3);

  CHECK(refines(net, SplitSystem::trivial_only(5)));
  CHECK(refines(net, sigma));
  CHECK(!refines(net, SplitSystem(5, {Split(5, bc)})));
}

TEST_CASE("sigma agrees with the minimal-cut oracle, n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      long long seen = 0;
      for_each_network(n, k, [&](const Network& net) {
        if (++seen % 7 != 1 && n == 6) return;  // sample the larger family
        const PhyloGraph g = build_graph(net);
        const auto cut_splits = oracles::displayed_splits_by_cuts(g);
        const SplitSystem system = sigma_splits(net);
        const std::set<Split> sigma(system.splits().begin(), system.splits().end());
        CHECK(sigma == cut_splits);
        // Structural invariants of the realization.
        for (int taxon = 1; taxon <= n; ++taxon) CHECK(g.degree(g.leaf_node(taxon)) == 1);
        for (int v = g.leaf_count; v < g.node_count; ++v) CHECK(g.degree(v) == 3);
        const PolygonSubdivision sub = PolygonSubdivision::build(net);
        int internal = 0;
        for (const auto& region : sub.regions)
          internal += region.boundary.size() >= 4 ? static_cast<int>(region.boundary.size()) : 1;
        CHECK(g.node_count - g.leaf_count == internal);
      });
    }
  }
}

TEST_CASE("every twist-orbit member canonicalizes to the same network, n <= 6") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      long long seen = 0;
      for_each_network(n, k, [&](const Network& net) {
        if (++seen % 11 != 1 && n == 6) return;
        for (const CircularOrdering& c : consistent_orderings(net))
          CHECK(make_network(c, net.bridges()) == net);
      });
    }
}

TEST_CASE("arc consistency across the orbit") {
  // A nontrivial split compatible with all bridges that is an arc of one
  // consistent ordering is an arc of all of them.
  for (int n = 4; n <= 6; ++n)
    for (int k = 0; k <= n - 3; ++k)
      for_each_network(n, k, [&](const Network& net) {
        const auto orbit = consistent_orderings(net);
        for (const Split& s : nontrivial_arc_splits(net.ordering())) {
          bool compatible = true;
          for (const Split& b : net.bridges())
            if (!splits_compatible(s, b)) compatible = false;
          if (!compatible) continue;
          for (const CircularOrdering& c : orbit) CHECK(is_arc(s, c));
        }
      });
}

TEST_CASE("graph realization shapes") {
  const PhyloGraph g1 = build_graph(n1());
  CHECK(g1.node_count == 10);
  CHECK(g1.edges.size() == 10);
  int total_degree = 0;
  for (int v = 0; v < g1.node_count; ++v) total_degree += g1.degree(v);
  CHECK(total_degree == 20);
  for (int taxon = 1; taxon <= 5; ++taxon) CHECK(g1.degree(g1.leaf_node(taxon)) == 1);
  for (int v = g1.leaf_count; v < g1.node_count; ++v) CHECK(g1.degree(v) == 3);

  const PhyloGraph cycle =
      build_graph(make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5}), {}));
  CHECK(cycle.node_count == 10);
  CHECK(cycle.edges.size() == 10);

  const PhyloGraph tree = build_graph(caterpillar5());
  CHECK(tree.node_count == 8);
  CHECK(tree.edges.size() == 7);
}

TEST_CASE("network json round trip through canonical form") {
  for (int k = 0; k <= 2; ++k)
    for_each_network(5, k, [&](const Network& net) {
      CHECK(network_from_json(to_json(net)) == net);
    });
}
