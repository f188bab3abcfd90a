#include "lpst/geom.hpp"

#include <algorithm>
#include <cmath>
#include <gmpxx.h>

namespace lpst {

namespace {

mpq_class exact(double v) { return mpq_class(v); }

int sign_of(const mpq_class& q) {
  const int s = sgn(q);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

int sgn_d(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Relative error bound for a two-product difference evaluated in doubles.
constexpr double kFilter = 1e-14;

}  // namespace

int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double l = (b.x - a.x) * (d.y - c.y);
  const double r = (b.y - a.y) * (d.x - c.x);
  const double det = l - r;
  const double bound = kFilter * (std::fabs(l) + std::fabs(r));
  if (det > bound || -det > bound) return sgn_d(det);
  const mpq_class e = (exact(b.x) - exact(a.x)) * (exact(d.y) - exact(c.y)) -
                      (exact(b.y) - exact(a.y)) * (exact(d.x) - exact(c.x));
  return sign_of(e);
}

int orientation(const Point& p, const Point& q, const Point& r) {
  return cross_sign(p, q, p, r);
}

int dot_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double l = (b.x - a.x) * (d.x - c.x);
  const double r = (b.y - a.y) * (d.y - c.y);
  const double s = l + r;
  const double bound = kFilter * (std::fabs(l) + std::fabs(r));
  if (s > bound || -s > bound) return sgn_d(s);
  const mpq_class e = (exact(b.x) - exact(a.x)) * (exact(d.x) - exact(c.x)) +
                      (exact(b.y) - exact(a.y)) * (exact(d.y) - exact(c.y));
  return sign_of(e);
}

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

int compare_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double ab = (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
  const double cd = (c.x - d.x) * (c.x - d.x) + (c.y - d.y) * (c.y - d.y);
  const double diff = ab - cd;
  if (std::fabs(diff) > kFilter * (ab + cd)) return sgn_d(diff);
  auto sq = [](const Point& p, const Point& q) {
    const mpq_class dx = exact(p.x) - exact(q.x);
    const mpq_class dy = exact(p.y) - exact(q.y);
    return mpq_class(dx * dx + dy * dy);
  };
  return sign_of(mpq_class(sq(a, b) - sq(c, d)));
}

bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return false;
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Collinear touching cannot occur in general position; treat an endpoint
  // lying inside the other open segment as a crossing for robustness.
  auto inside = [](const Point& a, const Point& b, const Point& p) {
    return dot_sign(p, a, p, b) < 0;
  };
  if (o1 == 0 && inside(p1, p2, q1)) return true;
  if (o2 == 0 && inside(p1, p2, q2)) return true;
  if (o3 == 0 && inside(q1, q2, p1)) return true;
  if (o4 == 0 && inside(q1, q2, p2)) return true;
  return false;
}

std::string GeneralPositionViolation::describe() const {
  if (kind == Kind::Duplicate)
    return "duplicate points (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "collinear triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + ")";
}

std::optional<GeneralPositionViolation> validate_general_position(
    const std::vector<Point>& pts) {
  using K = GeneralPositionViolation::Kind;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y))
      throw PreconditionError("non-finite coordinate at index " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) return GeneralPositionViolation{K::Duplicate, i, j, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          return GeneralPositionViolation{K::Collinear, i, j, k};
  return std::nullopt;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  if (auto v = validate_general_position(pts_))
    throw PreconditionError("point set not in general position: " + v->describe());
}

void PointSet::check_index(int i) const {
  if (i < 0 || i >= n())
    throw PreconditionError("point index " + std::to_string(i) + " out of range");
}

bool segments_cross(const Edge& s1, const Edge& s2, const PointSet& ps) {
  ps.check_index(s1.u);
  ps.check_index(s1.v);
  ps.check_index(s2.u);
  ps.check_index(s2.v);
  if (s1.u == s1.v || s2.u == s2.v) throw PreconditionError("degenerate segment");
  if (s1.touches(s2.u) || s1.touches(s2.v)) return false;
  return segments_cross(ps[s1.u], ps[s1.v], ps[s2.u], ps[s2.v]);
}

std::vector<int> convex_hull(const PointSet& ps) {
  const int n = ps.n();
  if (n < 3) throw PreconditionError("convex hull needs at least 3 points");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
    return ps[a].y < ps[b].y;
  });
  std::vector<int> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orientation(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && orientation(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace lpst
