#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpst/errors.hpp"

namespace lpst {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// Undirected segment between two point indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool touches(int i) const { return u == i || v == i; }
  int other(int i) const { return u == i ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

struct GeneralPositionViolation {
  enum class Kind { Duplicate, Collinear };
  Kind kind = Kind::Duplicate;
  int i = 0, j = 0, k = -1;  // k is -1 for duplicates
  std::string describe() const;
};

// Sign of (b - a) x (d - c), exact for any finite double input.
int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d);

// +1 if r is strictly left of the directed line pq, -1 if right, 0 if collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// Sign of (b - a) . (d - c), exact.
int dot_sign(const Point& a, const Point& b, const Point& c, const Point& d);

double dist(const Point& a, const Point& b);

// Exact comparison of |ab| and |cd|: -1, 0 or +1.
int compare_dist(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff the open segments p1p2 and q1q2 share a point.
bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

std::optional<GeneralPositionViolation> validate_general_position(
    const std::vector<Point>& pts);

// Immutable point set in general position. Indices are point identifiers.
class PointSet {
 public:
  PointSet() = default;
  // Throws PreconditionError if the points are not in general position.
  explicit PointSet(std::vector<Point> pts);

  std::size_t size() const { return pts_.size(); }
  int n() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  double length(const Edge& e) const { return dist(pts_[e.u], pts_[e.v]); }
  void check_index(int i) const;

 private:
  std::vector<Point> pts_;
};

bool segments_cross(const Edge& s1, const Edge& s2, const PointSet& ps);

// Hull vertices in counterclockwise order. Requires n >= 3.
std::vector<int> convex_hull(const PointSet& ps);

}  // namespace lpst
