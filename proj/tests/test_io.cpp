#include <sstream>

#include "doctest.h"
#include "lpst/generators.hpp"
#include "lpst/io.hpp"
#include "lpst/render.hpp"

using namespace lpst;

namespace {

PointSet points_from(const std::string& text) {
  std::istringstream in(text);
  return read_points(in);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("point files") {
  auto ps = points_from("# three points\n0 0\n\n  1.5 -2e1\n  # more\n.25 3.\n");
  REQUIRE(ps.n() == 3);
  CHECK(ps[1].x == 1.5);
  CHECK(ps[1].y == -20.0);
  CHECK(ps[2].x == 0.25);
  CHECK(ps[2].y == 3.0);

  CHECK_THROWS_AS(points_from("0 0\n1\n"), ParseError);
  CHECK_THROWS_AS(points_from("0 0\n1 x\n"), ParseError);
  CHECK_THROWS_AS(points_from("0 0\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(points_from("nan 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(points_from("1e999 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(points_from("0 0\n1 1\n2 2\n"), PreconditionError);
  CHECK_THROWS_AS(points_from("0 0\n1 1\n0 0\n"), PreconditionError);
  // Collinear as decimals although the nearest doubles are not.
  CHECK_THROWS_AS(points_from("0.1 0.1\n0.2 0.2\n0.3 0.3\n"), PreconditionError);
  CHECK_THROWS_AS(points_from("0 0.1\n1 0.2\n2 0.3\n"), PreconditionError);
  CHECK_NOTHROW(points_from("0 0.1\n1 0.2\n2 0.31\n"));
}

TEST_CASE("point file round trip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PointSet ps = random_general_position(12, seed);
    std::ostringstream out;
    write_points(out, ps);
    const PointSet back = points_from(out.str());
    REQUIRE(back.n() == ps.n());
    for (int i = 0; i < ps.n(); ++i) {
      CHECK(back[i].x == ps[i].x);
      CHECK(back[i].y == ps[i].y);
    }
    std::ostringstream again;
    write_points(again, back);
    CHECK(again.str() == out.str());
  }
  const PointSet cx = counterexample_9pt();
  std::ostringstream out;
  write_points(out, cx);
  const PointSet back = points_from(out.str());
  for (int i = 0; i < 9; ++i) CHECK((back[i].x == cx[i].x && back[i].y == cx[i].y));
}

TEST_CASE("tree files") {
  SpanningTree t(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  std::ostringstream out;
  write_tree(out, t);
  CHECK(out.str() == "0 1\n1 2\n1 3\n3 4\n");
  std::istringstream in("# tree\n" + out.str());
  CHECK(read_tree(in) == t);
  std::istringstream sized(out.str());
  CHECK_THROWS_AS(read_tree(sized, 6), PreconditionError);
  std::istringstream cyc("0 1\n1 2\n2 0\n");
  CHECK_THROWS_AS(read_tree(cyc), PreconditionError);
  std::istringstream bad("0 1\n1 two\n");
  CHECK_THROWS_AS(read_tree(bad), ParseError);
  std::istringstream neg("0 -1\n");
  CHECK_THROWS_AS(read_tree(neg), ParseError);
}

TEST_CASE("flat files") {
  for (const FlatConvexSet& f : {diameter_bound_arc(3), p4k2(1), p4k2(2), arc_Pn(6)}) {
    std::ostringstream out;
    write_flat(out, f);
    std::istringstream in(out.str());
    CHECK(read_flat(in) == f);
  }
  std::ostringstream out;
  write_flat(out, diameter_bound_arc(3));
  CHECK(out.str() == "arc\n0\n1\n4\n8\n10\n");

  std::istringstream twin("twin\n0 top\n5 top\n10\n7 bottom\n3 bottom\n");
  const FlatConvexSet f = read_flat(twin);
  CHECK(f.kind() == FlatConvexSet::Kind::Twin);
  CHECK(f.n() == 5);
  CHECK(f.sides()[3] == Side::Bottom);

  std::istringstream no_header("0\n1\n");
  CHECK_THROWS_AS(read_flat(no_header), ParseError);
  std::istringstream bad_side("arc\n0\n1 up\n");
  CHECK_THROWS_AS(read_flat(bad_side), ParseError);
  std::istringstream unsorted("arc\n0\n3\n2\n");
  CHECK_THROWS_AS(read_flat(unsorted), PreconditionError);
}

TEST_CASE("caterpillar files") {
  std::ostringstream out;
  write_caterpillar(out, {2, 0, 3});
  CHECK(out.str() == "spine 2 0 3\n");
  std::istringstream in("# c\n" + out.str());
  CHECK(read_caterpillar(in) == std::vector<int>{2, 0, 3});
  std::istringstream bad("spine 2 -1\n");
  CHECK_THROWS_AS(read_caterpillar(bad), ParseError);
  std::istringstream wrong("path 1 2\n");
  CHECK_THROWS_AS(read_caterpillar(wrong), ParseError);
}

TEST_CASE("instance detection") {
  std::istringstream flat("# gaps 1 3 2\narc\n0\n1\n4\n6\n");
  CHECK(std::holds_alternative<FlatConvexSet>(read_instance(flat)));
  std::istringstream pts("0 0\n1 0\n0 1\n");
  CHECK(std::holds_alternative<PointSet>(read_instance(pts)));
  CHECK_THROWS_AS(read_points_file("/nonexistent/points.txt"), ParseError);
}

TEST_CASE("svg rendering") {
  PointSet ps({{0, 0}, {4, 0}, {1, 3}});
  SpanningTree t(3, {{0, 1}, {1, 2}});
  const std::string svg = render_svg(ps, &t);
  CHECK(count(svg, "<circle") == 3);
  CHECK(count(svg, "<line") == 2);
  CHECK(count(svg, "<polygon") == 0);
  CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
  CHECK(render_svg(ps, &t) == svg);
  CHECK(count(render_svg(ps, nullptr, {.hull = true}), "<polygon") == 1);
  // 4 x 3 box at the 4:3 canvas ratio fills both margins; y points up.
  CHECK(svg.find("cx=\"40.000\" cy=\"570.000\"") != std::string::npos);
  CHECK(svg.find("cx=\"760.000\" cy=\"570.000\"") != std::string::npos);
  CHECK(svg.find("cx=\"220.000\" cy=\"30.000\"") != std::string::npos);
  SpanningTree wrong(2, {{0, 1}});
  CHECK_THROWS_AS(render_svg(ps, &wrong), PreconditionError);
}
