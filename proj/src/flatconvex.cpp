#include "lpst/flatconvex.hpp"

#include <algorithm>
#include <string>

namespace lpst {

FlatConvexSet FlatConvexSet::arc(std::vector<std::int64_t> xs) {
  std::vector<Side> sides(xs.size(), Side::Top);
  return from_sides(Kind::Arc, std::move(xs), std::move(sides));
}

FlatConvexSet FlatConvexSet::twin(std::vector<std::int64_t> top,
                                  std::vector<std::int64_t> bottom) {
  std::vector<Side> sides(top.size(), Side::Top);
  sides.insert(sides.end(), bottom.size(), Side::Bottom);
  top.insert(top.end(), bottom.begin(), bottom.end());
  return from_sides(Kind::Twin, std::move(top), std::move(sides));
}

FlatConvexSet FlatConvexSet::from_sides(Kind kind, std::vector<std::int64_t> xs,
                                        std::vector<Side> sides) {
  if (xs.size() < 2) throw PreconditionError("flat set needs at least 2 points");
  if (xs.size() != sides.size()) throw PreconditionError("flat set side tags mismatch");
  std::size_t t = 0;
  while (t < xs.size() && sides[t] == Side::Top) ++t;
  for (std::size_t i = t; i < xs.size(); ++i)
    if (sides[i] != Side::Bottom)
      throw PreconditionError("flat set must list the top arc before the bottom arc");
  if (t < 2) throw PreconditionError("flat top arc needs at least 2 points");
  for (std::size_t i = 1; i < t; ++i)
    if (xs[i] <= xs[i - 1]) throw PreconditionError("flat top arc must be strictly increasing");
  if (kind == Kind::Arc && t != xs.size())
    throw PreconditionError("single arc cannot contain bottom points");
  for (std::size_t i = t; i < xs.size(); ++i) {
    if (xs[i] <= xs[0] || xs[i] >= xs[t - 1])
      throw PreconditionError("bottom arc must lie strictly between the extremes");
    if (i > t && xs[i] >= xs[i - 1])
      throw PreconditionError("flat bottom arc must be strictly decreasing");
  }
  FlatConvexSet f;
  f.kind_ = kind;
  f.xs_ = std::move(xs);
  f.sides_ = std::move(sides);
  return f;
}

std::int64_t FlatConvexSet::width() const {
  const auto [lo, hi] = std::minmax_element(xs_.begin(), xs_.end());
  return *hi - *lo;
}

std::int64_t FlatConvexSet::flat_length(const Edge& e) const {
  const std::int64_t d = xs_.at(e.u) - xs_.at(e.v);
  return d < 0 ? -d : d;
}

std::vector<std::int64_t> gap_sequence(const FlatConvexSet& f) {
  if (f.kind() != FlatConvexSet::Kind::Arc)
    throw PreconditionError("gap sequence is defined for single arcs");
  std::vector<std::int64_t> g;
  for (int i = 0; i + 1 < f.n(); ++i) g.push_back(f.xs()[i + 1] - f.xs()[i]);
  return g;
}

std::vector<int> cover_sequence(const SpanningTree& t, const FlatConvexSet& f) {
  if (f.kind() != FlatConvexSet::Kind::Arc)
    throw PreconditionError("cover sequence is defined for single arcs");
  if (t.n() != f.n()) throw PreconditionError("tree and flat set sizes differ");
  const auto& xs = f.xs();
  std::vector<int> c(f.n() - 1, 0);
  for (const Edge& e : t.edges()) {
    const std::int64_t lo = std::min(xs[e.u], xs[e.v]), hi = std::max(xs[e.u], xs[e.v]);
    for (int i = 0; i + 1 < f.n(); ++i)
      if (lo < xs[i + 1] && hi > xs[i]) ++c[i];
  }
  return c;
}

std::int64_t flat_length(const SpanningTree& t, const FlatConvexSet& f) {
  if (t.n() != f.n()) throw PreconditionError("tree and flat set sizes differ");
  std::int64_t s = 0;
  for (const Edge& e : t.edges()) s += f.flat_length(e);
  return s;
}

std::int64_t flat_length_from_covers(const SpanningTree& t, const FlatConvexSet& f) {
  const auto g = gap_sequence(f);
  const auto c = cover_sequence(t, f);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * c[i];
  return s;
}

bool chords_cross_cyclic(const Edge& e1, const Edge& e2) {
  if (e1.touches(e2.u) || e1.touches(e2.v)) return false;
  const bool c_in = e1.u < e2.u && e2.u < e1.v;
  const bool d_in = e1.u < e2.v && e2.v < e1.v;
  return c_in != d_in;
}

bool chords_cross(const Edge& e1, const Edge& e2, const FlatConvexSet& f) {
  for (int i : {e1.u, e1.v, e2.u, e2.v})
    if (i < 0 || i >= f.n()) throw PreconditionError("chord index out of range");
  return chords_cross_cyclic(e1, e2);
}

PointSet realize(const FlatConvexSet& f, double eps) {
  if (!(eps > 0)) throw PreconditionError("eps must be positive");
  const auto& xs = f.xs();
  const std::int64_t x0 = *std::min_element(xs.begin(), xs.end());
  const double w = static_cast<double>(f.width());
  // Distinct per-point factors keep accidental collinearities out; they are
  // far below the curvature margin of the bump for integer coordinates.
  const double delta = 1e-9;
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (int i = 0; i < f.n(); ++i) {
    const double x = static_cast<double>(xs[i] - x0);
    const double bump = x * (w - x) / w;
    const double sign = f.sides()[i] == Side::Top ? 1.0 : -1.0;
    pts.push_back({static_cast<double>(xs[i]), sign * eps * bump * (1.0 + i * delta)});
  }
  return PointSet(std::move(pts));
}

}  // namespace lpst
