#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lpst/convexopt.hpp"
#include "lpst/generators.hpp"
#include "lpst/oracle.hpp"

using namespace lpst;

namespace {

// Every caterpillar shape on n vertices, as spine leaf counts.
std::vector<std::vector<int>> caterpillar_shapes(int n) {
  std::vector<std::vector<int>> out;
  if (n == 2) return {{}};
  for (int s = 1; s <= n - 2; ++s) {
    std::vector<int> cur(s, 0);
    const int leaves = n - s;
    // distribute leaves; ends need one leaf each (two for a lone spine vertex)
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == s) {
        if (left != 0) return;
        if (s == 1 ? cur[0] < 2 : (cur[0] < 1 || cur[s - 1] < 1)) return;
        out.push_back(cur);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        cur[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, leaves);
  }
  return out;
}

std::vector<int> identity_positions(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

FlatConvexSet unit_arc(int n) {
  std::vector<std::int64_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  return FlatConvexSet::arc(xs);
}

bool plane_on_arc(const SpanningTree& t) {
  const auto& es = t.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (chords_cross_cyclic(es[i], es[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("convex DP on a triangle drops the shortest side") {
  PointSet ps({{0, 0}, {4, 0}, {0, 3}});
  SpanningTree t = longest_plane_tree_convex(ps);
  CHECK(t == SpanningTree(3, {{0, 1}, {1, 2}}));
  CHECK(tree_length(t, ps) == doctest::Approx(9.0));
}

TEST_CASE("convex DP on a realized flat arc") {
  const FlatConvexSet f = FlatConvexSet::arc({0, 1, 4, 6});
  PointSet ps = realize(f, 1e-6);
  SpanningTree t = longest_plane_tree_convex(ps);
  CHECK(t == SpanningTree(4, {{0, 3}, {3, 1}, {1, 2}}));
  CHECK(flat_length(t, f) == 14);
}

TEST_CASE("convex DP rejects interior points") {
  PointSet ps({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK_THROWS_AS(longest_plane_tree_convex(ps), PreconditionError);
}

TEST_CASE("convex DP equals brute force and its optima zigzag") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    PointSet ps = random_convex_position(n, 700 + seed);
    SpanningTree t = longest_plane_tree_convex(ps);
    const OracleResult brute = longest_plane_tree_bruteforce(ps);
    CHECK(is_plane(t, ps));
    CHECK(std::fabs(tree_length(t, ps) - brute.best_length) <= 1e-12);
    CHECK(dual_is_path(t, ps));
    CHECK(dual_is_path(brute.best_tree, ps));
    CHECK(is_caterpillar(t));
  }
}

TEST_CASE("every longest tree on a flat arc zigzags") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 3 + rep % 7;
    std::vector<std::int64_t> xs{0};
    for (int i = 1; i < n; ++i) xs.push_back(xs.back() + 1 + static_cast<std::int64_t>(rng() % 9));
    const FlatConvexSet f = FlatConvexSet::arc(xs);
    for (const SpanningTree& t : all_longest_plane_trees(f)) {
      CHECK(dual_is_path_cyclic(t, identity_positions(n)));
      CHECK(t.contains(Edge(0, n - 1)));
      CHECK(is_unimodal_permutation(cover_sequence(t, f)));
    }
  }
}

TEST_CASE("unimodal permutation examples") {
  CHECK(is_unimodal_permutation({1, 3, 2}));
  CHECK_FALSE(is_unimodal_permutation({2, 1, 3}));
  CHECK_FALSE(is_unimodal_permutation({1, 2, 2}));
  CHECK(is_unimodal_permutation({3, 2, 1}));
  CHECK(is_unimodal_permutation({1}));
  CHECK_FALSE(is_unimodal_permutation({0, 1}));
}

TEST_CASE("zigzag of a path and a star") {
  SpanningTree path(4, {{0, 1}, {1, 2}, {2, 3}});
  SpanningTree z = zigzag_embedding(path, 4);
  CHECK(z == SpanningTree(4, {{0, 3}, {3, 1}, {1, 2}}));
  CHECK(cover_sequence(z, unit_arc(4)) == std::vector<int>{1, 3, 2});
  for (int n = 3; n <= 7; ++n) {
    SpanningTree s = zigzag_embedding(star_tree(n, n / 2), n);
    CHECK(s == star_tree(n, 0));
    std::vector<int> want(n - 1);
    std::iota(want.rbegin(), want.rend(), 1);
    CHECK(cover_sequence(s, unit_arc(n)) == want);
  }
  CHECK_THROWS_AS(zigzag_embedding(path, 5), PreconditionError);
  SpanningTree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK_THROWS_AS(zigzag_embedding(spider, 7), PreconditionError);
}

TEST_CASE("zigzag of every caterpillar with at most 7 edges") {
  int shapes = 0;
  for (int n = 2; n <= 8; ++n)
    for (const auto& spine : caterpillar_shapes(n)) {
      const SpanningTree cat = caterpillar_from_spine(spine);
      const SpanningTree z = zigzag_embedding(cat, n);
      CHECK(plane_on_arc(z));
      CHECK(z.contains(Edge(0, n - 1)));
      CHECK(dual_is_path_cyclic(z, identity_positions(n)));
      CHECK(is_unimodal_permutation(cover_sequence(z, unit_arc(n))));
      CHECK(caterpillars_isomorphic(z, cat));
      ++shapes;
    }
  CHECK(shapes > 40);
}

TEST_CASE("zigzag trees containing the long edge have unimodal covers") {
  for (int n = 2; n <= 8; ++n) {
    const FlatConvexSet f = unit_arc(n);
    enumerate_plane_spanning_trees(f, [&](const EdgeList& es) {
      SpanningTree t(n, es);
      if (!t.contains(Edge(0, n - 1)) || !dual_is_path_cyclic(t, identity_positions(n))) return;
      CHECK(is_caterpillar(t));
      CHECK(is_unimodal_permutation(cover_sequence(t, f)));
    });
  }
}

TEST_CASE("caterpillar canonical form") {
  CHECK(caterpillar_form(SpanningTree(4, {{0, 1}, {1, 2}, {2, 3}})).spine_leaves == std::vector<int>{1, 1});
  CHECK(caterpillar_form(star_tree(5, 2)).spine_leaves == std::vector<int>{4});
  // relabelling does not change the form
  SpanningTree a = caterpillar_from_spine({2, 0, 1, 3});
  std::vector<int> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(5));
  EdgeList es;
  for (const Edge& e : a.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  CHECK(caterpillars_isomorphic(a, SpanningTree(a.n(), es)));
  CHECK(caterpillar_form(a).spine_leaves == std::vector<int>{2, 0, 1, 3});
  CHECK(caterpillar_form(caterpillar_from_spine({3, 1, 0, 2})).spine_leaves == std::vector<int>{2, 0, 1, 3});
  CHECK_FALSE(caterpillars_isomorphic(caterpillar_from_spine({1, 2}), caterpillar_from_spine({2, 1, 0})));
}

TEST_CASE("caterpillar shapes up to isomorphism") {
  // 1, 1, 2, 3, 6, 10, 20 caterpillars on 2..8 vertices
  const int expected[] = {1, 1, 2, 3, 6, 10, 20};
  for (int n = 2; n <= 8; ++n) {
    const auto forms = all_caterpillar_forms(n);
    CHECK(forms.size() == static_cast<std::size_t>(expected[n - 2]));
    for (const auto& f : forms) CHECK(caterpillar_form(caterpillar_from_spine(f.spine_leaves)) == f);
  }
  CHECK_THROWS_AS(all_caterpillar_forms(1), PreconditionError);
}

TEST_CASE("caterpillar to flat arc") {
  CHECK(gap_sequence(caterpillar_to_flat_arc(SpanningTree(4, {{0, 1}, {1, 2}, {2, 3}}))) ==
        std::vector<std::int64_t>{1, 3, 2});
  CHECK(gap_sequence(caterpillar_to_flat_arc(star_tree(4, 1))) == std::vector<std::int64_t>{3, 2, 1});
}

TEST_CASE("the realized arc has the caterpillar as its unique longest tree") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& spine : caterpillar_shapes(n)) {
      const SpanningTree cat = caterpillar_from_spine(spine);
      const FlatConvexSet f = caterpillar_to_flat_arc(cat);
      const auto optima = all_longest_plane_trees(f);
      REQUIRE(optima.size() == 1);
      CHECK(caterpillars_isomorphic(optima[0], cat));
      CHECK(optima[0] == zigzag_embedding(cat, n));
    }
}

TEST_CASE("a face with three tree edges admits a longer exchange") {
  int non_zigzag = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 6 + static_cast<int>(seed % 2);
    PointSet ps = random_convex_position(n, 800 + seed);
    enumerate_plane_spanning_trees(ps, [&](const EdgeList& es) {
      SpanningTree t(n, es);
      if (dual_is_path(t, ps)) return;
      ++non_zigzag;
      const auto better = face_exchange_improvement(t, ps);
      REQUIRE(better.has_value());
      CHECK(is_plane(*better, ps));
      CHECK(tree_length(*better, ps) > tree_length(t, ps));
    });
  }
  CHECK(non_zigzag > 100);
}
