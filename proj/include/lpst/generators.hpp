#pragma once

#include <cstdint>
#include <string>

#include "lpst/flatconvex.hpp"
#include "lpst/geom.hpp"

namespace lpst {

// Exact optimum and constrained optimum of an extremal family, in flat units.
struct BoundReport {
  std::string name;
  std::int64_t parameter = 0;
  std::int64_t optimum = 0;
  std::int64_t constrained = 0;
  double ratio() const { return static_cast<double>(constrained) / static_cast<double>(optimum); }
};

// Evenly spaced arc with xs = 0..n.
FlatConvexSet arc_Pn(int n);

// Arc on d+2 points with gaps 1,3,5,... rising to d+1 then ...,6,4,2.
FlatConvexSet diameter_bound_arc(int d);
std::int64_t diameter_bound_optimum(int d);  // (d+1)(d+2)(2d+3)/6

// Two mirrored arcs of 2k+2 points sharing their extremes, each with gaps
// k ones, then 2k+1, then k ones.
FlatConvexSet p4k2(int k);
std::int64_t p4k2_long_tree(int k);        // 12k^2 + 6k + 1
std::int64_t p4k2_diameter3_cap(int k);    // 10k^2 + 6k + 1
std::int64_t p4k2_star_cap(int k);         // 8k^2 + 6k + 1

// Deterministic points in the unit square; every triangle has area >= 1e-9.
PointSet random_general_position(int n, std::uint64_t seed);

// Random points in convex position on an ellipse with random axes.
PointSet random_convex_position(int n, std::uint64_t seed);

// Three nested equilateral triangles on which swap search gets stuck.
PointSet counterexample_9pt();
// rotation_sign +1 turns the inner triangles counterclockwise, -1 clockwise.
PointSet counterexample_9pt_variant(int rotation_sign);

}  // namespace lpst
