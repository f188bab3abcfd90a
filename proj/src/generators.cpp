#include "lpst/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace lpst {

namespace {

// Platform-independent uniform double in [0, 1).
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

FlatConvexSet arc_Pn(int n) {
  if (n < 1) throw PreconditionError("arc_Pn needs n >= 1");
  std::vector<std::int64_t> xs(n + 1);
  for (int i = 0; i <= n; ++i) xs[i] = i;
  return FlatConvexSet::arc(std::move(xs));
}

FlatConvexSet diameter_bound_arc(int d) {
  if (d < 2) throw PreconditionError("diameter_bound_arc needs d >= 2");
  std::vector<std::int64_t> gaps;
  for (int g = 1; g <= d + 1; g += 2) gaps.push_back(g);
  for (int g = (d + 1) % 2 == 0 ? d + 1 : d; g >= 2; g -= 2) gaps.push_back(g);
  std::vector<std::int64_t> xs{0};
  for (auto g : gaps) xs.push_back(xs.back() + g);
  return FlatConvexSet::arc(std::move(xs));
}

std::int64_t diameter_bound_optimum(int d) {
  const std::int64_t m = d;
  return (m + 1) * (m + 2) * (2 * m + 3) / 6;
}

FlatConvexSet p4k2(int k) {
  if (k < 1) throw PreconditionError("p4k2 needs k >= 1");
  std::vector<std::int64_t> top, bottom;
  for (int i = 0; i <= k; ++i) top.push_back(i);
  for (int i = 3 * k + 1; i <= 4 * k + 1; ++i) top.push_back(i);
  for (int i = 4 * k; i >= 3 * k + 1; --i) bottom.push_back(i);
  for (int i = k; i >= 1; --i) bottom.push_back(i);
  return FlatConvexSet::twin(std::move(top), std::move(bottom));
}

std::int64_t p4k2_long_tree(int k) { return 12LL * k * k + 6LL * k + 1; }
std::int64_t p4k2_diameter3_cap(int k) { return 10LL * k * k + 6LL * k + 1; }
std::int64_t p4k2_star_cap(int k) { return 8LL * k * k + 6LL * k + 1; }

PointSet random_general_position(int n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_general_position needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point c{unit(rng), unit(rng)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == c) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        const double area2 = (pts[j].x - pts[i].x) * (c.y - pts[i].y) -
                             (pts[j].y - pts[i].y) * (c.x - pts[i].x);
        if (std::fabs(area2) < 2e-9) ok = false;
      }
    }
    if (ok) pts.push_back(c);
  }
  return PointSet(std::move(pts));
}

PointSet random_convex_position(int n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("random_convex_position needs n >= 3");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<double> angles(n);
    for (auto& a : angles) a = 2 * std::numbers::pi * unit(rng);
    std::sort(angles.begin(), angles.end());
    // Points on an ellipse with random axes are in convex position.
    const double ax = 0.5 + 0.5 * unit(rng), ay = 0.5 + 0.5 * unit(rng);
    std::vector<Point> pts;
    for (double a : angles) pts.push_back({ax * std::cos(a), ay * std::sin(a)});
    if (validate_general_position(pts)) continue;
    PointSet ps(pts);
    if (static_cast<int>(convex_hull(ps).size()) == n) return ps;
  }
}

PointSet counterexample_9pt_variant(int rotation_sign) {
  const double pi = std::numbers::pi;
  const double alpha = 17.0 * pi / 180.0 * rotation_sign;
  const double radius[3] = {1.0, 2.0 / 3.0, 1.0 / 3.0};
  const double turn[3] = {0.0, alpha, alpha / 2};
  std::vector<Point> pts;
  for (int ring = 0; ring < 3; ++ring)
    for (int v = 0; v < 3; ++v) {
      // Outer vertices at 90, 210 and 330 degrees: horizontal side at the bottom.
      const double a = pi / 2 + v * 2 * pi / 3 + turn[ring];
      pts.push_back({radius[ring] * std::cos(a), radius[ring] * std::sin(a)});
    }
  return PointSet(std::move(pts));
}

PointSet counterexample_9pt() { return counterexample_9pt_variant(+1); }

}  // namespace lpst
