#include "lpst/render.hpp"

#include <algorithm>
#include <cstdio>

#include "lpst/errors.hpp"

namespace lpst {

namespace {

constexpr double kWidth = 800, kHeight = 600, kMargin = 0.05;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

}  // namespace

std::string render_svg(const PointSet& ps, const SpanningTree* tree, RenderOptions opts) {
  if (tree && tree->n() != ps.n()) throw PreconditionError("tree and point set sizes differ");
  const int n = ps.n();
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || ps[i].x < x0) x0 = ps[i].x;
    if (i == 0 || ps[i].x > x1) x1 = ps[i].x;
    if (i == 0 || ps[i].y < y0) y0 = ps[i].y;
    if (i == 0 || ps[i].y > y1) y1 = ps[i].y;
  }
  const double inner_w = kWidth * (1 - 2 * kMargin), inner_h = kHeight * (1 - 2 * kMargin);
  double scale = 1;
  if (x1 > x0 || y1 > y0) {
    if (x1 > x0 && y1 > y0)
      scale = std::min(inner_w / (x1 - x0), inner_h / (y1 - y0));
    else
      scale = x1 > x0 ? inner_w / (x1 - x0) : inner_h / (y1 - y0);
  }
  // centre the drawing
  const double ox = kWidth / 2 - scale * (x0 + x1) / 2;
  const double oy = kHeight / 2 + scale * (y0 + y1) / 2;
  auto sx = [&](int i) { return fixed(ox + scale * ps[i].x); };
  auto sy = [&](int i) { return fixed(oy - scale * ps[i].y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  if (opts.hull && n >= 3) {
    out += "<polygon fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\" points=\"";
    bool first = true;
    for (int v : convex_hull(ps)) {
      if (!first) out += ' ';
      first = false;
      out += sx(v) + "," + sy(v);
    }
    out += "\"/>\n";
  }
  if (tree)
    for (const Edge& e : tree->edges())
      out += "<line x1=\"" + sx(e.u) + "\" y1=\"" + sy(e.u) + "\" x2=\"" + sx(e.v) + "\" y2=\"" +
             sy(e.v) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (int i = 0; i < n; ++i)
    out += "<circle cx=\"" + sx(i) + "\" cy=\"" + sy(i) + "\" r=\"3\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace lpst
