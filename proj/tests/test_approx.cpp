#include <cmath>

#include "doctest.h"
#include "lpst/approx.hpp"
#include "lpst/flatconvex.hpp"
#include "lpst/generators.hpp"
#include "lpst/oracle.hpp"

using namespace lpst;

TEST_CASE("approximation constants") {
  const ApproxConstants c = approx_constant_f();
  CHECK(std::fabs(approx_polynomial(c.f)) <= 1e-10);
  CHECK(std::fabs(c.f - 0.546723) <= 1e-5);
  CHECK(std::fabs(c.beta - 0.1604) <= 1e-3);
  CHECK(c.beta > 0);
  CHECK(c.beta < 0.5);
  const double lhs = (2 * c.f - 1) / (2 * std::sqrt(5 - 8 * c.f) - 1);
  CHECK(std::fabs(lhs - c.beta) <= 1e-9);
}

TEST_CASE("only two roots solve the original equation") {
  const AlgebraRootReport r = check_algebra_roots();
  CHECK(r.ok);
  CHECK(std::fabs(r.residual_five_eighths) <= 1e-12);
  CHECK(std::fabs(r.residual_f) <= 1e-9);
  CHECK(std::fabs(r.fifth_root - 0.577526) <= 1e-5);
  CHECK(std::fabs(r.sixth_root - 0.596211) <= 1e-5);
  CHECK(std::fabs(r.residual_fifth) > 1e-6);
  CHECK(std::fabs(r.residual_sixth) > 1e-6);
}

TEST_CASE("stars") {
  PointSet ps({{0, 0}, {4, 0}, {0, 3}});
  CHECK(star(ps, 0) == SpanningTree(3, {{0, 1}, {0, 2}}));
  CHECK_THROWS(star(ps, 3));
  const PointSet arc = realize(arc_Pn(6), 1e-6);
  CHECK(flat_length(star(arc, 0), arc_Pn(6)) == 21);
  for (int a = 0; a < 7; ++a) CHECK(is_plane(star(arc, a), arc));
}

TEST_CASE("wedge tree with a lone near point is the star") {
  // every other point is closer to b than to a
  PointSet ps({{0, 0}, {1, 0}, {1.2, 0.5}, {1.5, -0.3}, {0.9, 0.8}});
  CHECK(wedge_tree(ps, 0, 1) == star(ps, 0));
}

TEST_CASE("wedge trees are plane spanning trees of diameter at most four") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    PointSet ps = random_general_position(n, 3000 + seed);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        SpanningTree t = wedge_tree(ps, a, b);
        CHECK(is_plane(t, ps));
        CHECK(t.contains(Edge(a, b)));
        CHECK(hop_diameter(t) <= 4);
        // the far side hangs directly on a
        for (int v = 0; v < n; ++v)
          if (v != a && compare_dist(ps[v], ps[a], ps[v], ps[b]) > 0) CHECK(t.contains(Edge(a, v)));
      }
  }
  CHECK_THROWS_AS(wedge_tree(random_general_position(4, 1), 2, 2), PreconditionError);
}

TEST_CASE("alg_simple against the oracle") {
  const double f = approx_constant_f().f;
  PointSet tri({{0, 0}, {4, 0}, {0, 3}});
  CHECK(tree_length(alg_simple(tri), tri) == doctest::Approx(longest_plane_tree_bruteforce(tri).best_length));
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    PointSet ps = random_general_position(n, 4000 + seed);
    SpanningTree t = alg_simple(ps);
    CHECK(is_plane(t, ps));
    const double len = tree_length(t, ps);
    CHECK(len >= f * longest_plane_tree_bruteforce(ps).best_length);
    for (int a = 0; a < n; ++a) CHECK(len >= tree_length(star(ps, a), ps) - 1e-12);
  }
}
