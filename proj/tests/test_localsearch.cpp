#include <algorithm>

#include "doctest.h"
#include "lpst/generators.hpp"
#include "lpst/localsearch.hpp"
#include "lpst/oracle.hpp"

using namespace lpst;

TEST_CASE("triangle swaps in its longest side") {
  PointSet ps({{0, 0}, {4, 0}, {0, 3}});
  SpanningTree shortest(3, {{0, 1}, {0, 2}});
  const auto sw = improving_swap_exists(shortest, ps);
  REQUIRE(sw.has_value());
  CHECK(sw->add == Edge(1, 2));
  CHECK(sw->remove == Edge(0, 2));
  CHECK(sw->gain == doctest::Approx(2.0));
  auto [final_tree, trace] = alg_local(ps, shortest);
  CHECK(final_tree == SpanningTree(3, {{0, 1}, {1, 2}}));
  CHECK(trace.size() == 1);
}

TEST_CASE("global optima admit no swap") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PointSet ps = random_general_position(3 + static_cast<int>(seed % 6), 5100 + seed);
    const OracleResult best = longest_plane_tree_bruteforce(ps);
    CHECK_FALSE(improving_swap_exists(best.best_tree, ps).has_value());
    CHECK(alg_local(ps, best.best_tree).second.empty());
  }
}

TEST_CASE("local search climbs to a local optimum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    PointSet ps = random_general_position(n, 5200 + seed);
    std::int64_t plane_trees = 0;
    enumerate_plane_spanning_trees(ps, [&](const EdgeList&) { ++plane_trees; });
    for (int root = 0; root < n; ++root) {
      auto [t, trace] = alg_local(ps, star_tree(n, root));
      CHECK(is_plane(t, ps));
      CHECK_FALSE(improving_swap_exists(t, ps).has_value());
      CHECK(static_cast<std::int64_t>(trace.size()) <= plane_trees);
      double prev = tree_length(star_tree(n, root), ps);
      for (const auto& step : trace) {
        CHECK(step.new_length > prev);
        prev = step.new_length;
      }
      CHECK(tree_length(t, ps) == doctest::Approx(prev));
    }
  }
}

TEST_CASE("four convex points from the shorter diagonal") {
  // square corners, stretched so the two diagonals differ
  PointSet ps({{0, 0}, {3, 0}, {3.2, 1}, {0.1, 1.1}});
  for (const auto& t0 : {SpanningTree(4, {{1, 3}, {0, 1}, {2, 3}}), SpanningTree(4, {{0, 2}, {0, 1}, {2, 3}})}) {
    auto [t, trace] = alg_local(ps, t0);
    CHECK(trace.size() <= 6);
    CHECK_FALSE(improving_swap_exists(t, ps).has_value());
  }
}

TEST_CASE("flat arc local search") {
  const FlatConvexSet f = arc_Pn(5);
  auto [t, trace] = alg_local(f, star_tree(6, 3));
  CHECK_FALSE(improving_swap_exists(t, f).has_value());
  CHECK(flat_length(t, f) >= flat_length(star_tree(6, 3), f));
}

TEST_CASE("swap search rejects crossing trees") {
  PointSet ps({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  SpanningTree crossing(4, {{0, 2}, {1, 3}, {0, 1}});
  CHECK_THROWS_AS(improving_swap_exists(crossing, ps), PreconditionError);
}
