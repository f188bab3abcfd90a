#include <algorithm>
#include <set>

#include "doctest.h"
#include "lpst/flatconvex.hpp"
#include "lpst/generators.hpp"
#include "lpst/localsearch.hpp"
#include "lpst/oracle.hpp"

using namespace lpst;

namespace {

// All labelled trees on n vertices, decoded from Pruefer sequences.
std::vector<EdgeList> cayley_trees(int n) {
  std::vector<EdgeList> out;
  if (n == 2) return {{Edge(0, 1)}};
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    EdgeList es;
    for (int s : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      es.emplace_back(leaf, s);
      --deg[leaf];
      --deg[s];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) (u < 0 ? u : v) = i;
    es.emplace_back(u, v);
    std::sort(es.begin(), es.end());
    out.push_back(es);
    int k = 0;
    while (k < n - 2 && ++seq[k] == n) seq[k++] = 0;
    if (k == n - 2) break;
  }
  return out;
}

std::set<EdgeList> plane_cayley(const PointSet& ps) {
  std::set<EdgeList> s;
  for (auto& es : cayley_trees(ps.n()))
    if (is_plane(SpanningTree(ps.n(), es), ps)) s.insert(es);
  return s;
}

}  // namespace

TEST_CASE("Pruefer decoding yields n^(n-2) distinct trees") {
  auto t5 = cayley_trees(5);
  CHECK(t5.size() == 125);
  CHECK(std::set<EdgeList>(t5.begin(), t5.end()).size() == 125);
}

TEST_CASE("enumeration counts") {
  PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(enumerate_plane_spanning_trees(tri, [](const EdgeList&) {}) == 3);
  PointSet quad({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(enumerate_plane_spanning_trees(quad, [](const EdgeList&) {}) == 12);
}

TEST_CASE("enumeration equals filtered Cayley trees") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    PointSet ps = random_general_position(n, seed);
    std::set<EdgeList> seen;
    std::int64_t count = enumerate_plane_spanning_trees(ps, [&](const EdgeList& es) {
      CHECK(es.size() == static_cast<std::size_t>(n - 1));
      CHECK(is_plane(SpanningTree(n, es), ps));
      CHECK(seen.insert(es).second);
    });
    CHECK(count == static_cast<std::int64_t>(seen.size()));
    CHECK(seen == plane_cayley(ps));
  }
}

TEST_CASE("enumeration is lexicographic") {
  PointSet ps = random_general_position(6, 99);
  EdgeList prev;
  bool first = true;
  enumerate_plane_spanning_trees(ps, [&](const EdgeList& es) {
    if (!first) CHECK(prev < es);
    prev = es;
    first = false;
  });
}

TEST_CASE("cap handling") {
  PointSet ps = random_general_position(11, 1);
  CHECK_THROWS_AS(longest_plane_tree_bruteforce(ps), CapExceeded);
  CHECK_THROWS_AS(longest_plane_tree_bruteforce(ps, 40), PreconditionError);
}

TEST_CASE("brute-force optimum agrees with Cayley filtering") {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    PointSet ps = random_general_position(6, seed);
    double best = 0;
    for (auto& es : plane_cayley(ps)) best = std::max(best, tree_length(SpanningTree(6, es), ps));
    auto r = longest_plane_tree_bruteforce(ps);
    CHECK(r.best_length == doctest::Approx(best).epsilon(1e-13));
    CHECK(is_plane(r.best_tree, ps));
  }
}

TEST_CASE("three points: drop the shortest side") {
  PointSet tri({{0, 0}, {4, 0}, {0, 3}});
  auto r = longest_plane_tree_bruteforce(tri);
  CHECK(r.best_length == doctest::Approx(9.0));
  CHECK(r.best_tree == SpanningTree(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("flat arc with gaps 1,3,2") {
  auto f = FlatConvexSet::arc({0, 1, 4, 6});
  auto r = longest_plane_tree_bruteforce(f);
  CHECK(r.best_length == 14);
  CHECK(r.best_tree == SpanningTree(4, {{0, 3}, {1, 3}, {1, 2}}));
}

TEST_CASE("diameter-restricted optimum") {
  PointSet ps = random_general_position(7, 4);
  double best_star = 0;
  for (int r = 0; r < 7; ++r) best_star = std::max(best_star, tree_length(star_tree(7, r), ps));
  CHECK(longest_plane_tree_diameter_at_most(ps, 2).best_length == doctest::Approx(best_star));
  CHECK(longest_plane_tree_diameter_at_most(ps, 6).best_length ==
        doctest::Approx(longest_plane_tree_bruteforce(ps).best_length));
  CHECK_THROWS_AS(longest_plane_tree_diameter_at_most(ps, 1), PreconditionError);
}

TEST_CASE("crossing tree") {
  PointSet tri({{0, 0}, {4, 0}, {0, 3}});
  CHECK(longest_crossing_tree(tri).best_length == doctest::Approx(9.0));
  CHECK(longest_crossing_tree(arc_Pn(10)).best_length >= 70);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_general_position(7, seed);
    const double cr = longest_crossing_tree(ps).best_length;
    const double opt = longest_plane_tree_bruteforce(ps).best_length;
    double star = 0;
    for (int r = 0; r < 7; ++r) star = std::max(star, tree_length(star_tree(7, r), ps));
    CHECK(cr >= opt - 1e-12);
    CHECK(opt >= star - 1e-12);
  }
}

TEST_CASE("local optima scan") {
  PointSet tri({{0, 0}, {4, 0}, {0, 3}});
  auto lo = local_optima_scan(tri);
  REQUIRE(lo.size() == 1);
  CHECK(lo[0].first == longest_plane_tree_bruteforce(tri).best_tree);

  PointSet ps = random_general_position(7, 12);
  auto opt = longest_plane_tree_bruteforce(ps);
  auto scan = local_optima_scan(ps);
  CHECK(std::any_of(scan.begin(), scan.end(),
                    [&](auto& p) { return p.first == opt.best_tree; }));
  for (auto& [t, len] : scan) CHECK_FALSE(improving_swap_exists(t, ps).has_value());
}

TEST_CASE("optimum never decreases when a point is added") {
  PointSet big = random_general_position(8, 31);
  double prev = 0;
  for (int n = 3; n <= 8; ++n) {
    std::vector<Point> pts(big.points().begin(), big.points().begin() + n);
    const double v = longest_plane_tree_bruteforce(PointSet(pts)).best_length;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}
