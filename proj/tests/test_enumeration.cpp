#include <doctest.h>

#include <set>

#include "bmenet/enumeration.hpp"
#include "bmenet/error.hpp"

using namespace bmenet;

TEST_CASE("associahedron face counts") {
  for (int n = 3; n <= 9; ++n) CHECK(associahedron_face_count(n, 0) == 1);
  CHECK(associahedron_face_count(5, 1) == 5);
  CHECK(associahedron_face_count(6, 2) == 21);
  CHECK(associahedron_face_count(6, 3) == 14);  // Catalan(4), full triangulations
  CHECK_THROWS_AS((void)associahedron_face_count(5, 3), Error);

  SUBCASE("matches direct diagonal-set enumeration") {
    for (int n = 4; n <= 8; ++n)
      for (int k = 0; k <= n - 3; ++k) {
        long long count = 0;
        std::set<DiagonalSet> distinct;
        for_each_diagonal_set(n, k, [&](const DiagonalSet& set) {
          ++count;
          distinct.insert(set);
        });
        CHECK(Int(count) == associahedron_face_count(n, k));
        CHECK(distinct.size() == static_cast<std::size_t>(count));
      }
  }
}

TEST_CASE("closed-form network counts") {
  CHECK(network_count(5, 1) == 30);
  CHECK(network_count(8, 5) == 10395);
  CHECK(network_count(9, 6) == 135135);
  for (int n = 3; n <= 9; ++n)
    CHECK(network_count(n, 0) == factorial(static_cast<unsigned>(n - 1)) / 2);
  // The two closed forms agree.
  for (int n = 3; n <= 10; ++n)
    for (int k = 0; k <= n - 3; ++k)
      CHECK(network_count(n, k) * pow2(static_cast<unsigned>(k + 1)) ==
            associahedron_face_count(n, k) * factorial(static_cast<unsigned>(n - 1)));
}

TEST_CASE("table rows and row sums") {
  const CountTable table = CountTable::compute(3, 9);
  CHECK(table.values[2] == std::vector<Int>{12, 30, 15});
  CHECK(table.values[5] ==
        std::vector<Int>{2520, 25200, 75600, 94500, 51975, 10395});
  CHECK(table.values[6] == std::vector<Int>{20160, 272160, 1134000, 2079000, 1871100,
                                            810810, 135135});
  const std::vector<Int> sums{1, 6, 57, 750, 12645, 260190};
  for (std::size_t i = 0; i < sums.size(); ++i) CHECK(table.row_sums[i] == sums[i]);
}

TEST_CASE("diagonal sets as splits of the identity ordering") {
  const auto identity = CircularOrdering::canonicalize(std::vector{1, 2, 3, 4, 5});
  std::set<Split> seen;
  for (const DiagonalSet& set : enumerate_diagonal_sets(5, 1)) {
    const auto splits = diagonal_splits(5, set);
    REQUIRE(splits.size() == 1);
    CHECK(is_arc(splits.front(), identity));
    CHECK(!splits.front().trivial_split());
    seen.insert(splits.front());
  }
  CHECK(seen.size() == 5);  // every pentagon diagonal exactly once
}

TEST_CASE("canonical ordering stream") {
  std::vector<CircularOrdering> all = canonical_orderings(5);
  CHECK(all.size() == 12);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const CircularOrdering& c : all) {
    CHECK(c.seq()[0] == 1);
    CHECK(c.seq()[1] < c.seq()[4]);
  }
}

TEST_CASE("network enumeration is exact, canonical, and duplicate free") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      long long count = 0;
      std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> seen;
      Network previous = make_network(CircularOrdering::canonicalize(std::vector{1, 2, 3}), {});
      bool first = true;
      for_each_network(n, k, [&](const Network& net) {
        ++count;
        CHECK(net == make_network(net.ordering(), net.bridges()));
        seen.insert({net.ordering().seq(), net.bridge_intervals()});
        if (!first && n == previous.ambient()) CHECK(previous < net);
        previous = net;
        first = false;
      });
      CHECK(Int(count) == network_count(n, k));
      CHECK(seen.size() == static_cast<std::size_t>(count));
    }
  // The single n = 3 network.
  CHECK(enumerate_networks(3, 0).size() == 1);
}

TEST_CASE("enumeration count matches the closed form at n = 8") {
  for (int k = 0; k <= 5; ++k) {
    long long count = 0;
    for_each_network(8, k, [&](const Network&) { ++count; });
    CHECK(Int(count) == network_count(8, k));
  }
}

TEST_SUITE("long") {
  TEST_CASE("n = 9 spot checks at the extreme bridge counts") {
    long long tours = 0;
    for_each_network(9, 0, [&](const Network&) { ++tours; });
    CHECK(Int(tours) == network_count(9, 0));  // 20160
    long long trees = 0;
    for_each_network(9, 6, [&](const Network&) { ++trees; });
    CHECK(Int(trees) == network_count(9, 6));  // 135135
  }
}
