#pragma once

#include <utility>
#include <vector>

#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

// Best plane attachment of a subset of points to roots a and b, given that
// the edge ab is present. `length` excludes |ab|.
struct BistarSolution {
  double length = 0.0;
  std::vector<std::pair<int, int>> attach;  // (point, root)
};

// Points in `subset` must differ from a and b and avoid the line ab.
BistarSolution bistar_on_subset(const PointSet& ps, int a, int b, const std::vector<int>& subset);

// Longest plane spanning tree containing ab in which every other point is
// adjacent to a or b.
SpanningTree longest_plane_bistar(const PointSet& ps, int a, int b);

// Longest plane spanning tree of hop diameter at most three.
SpanningTree longest_diameter3_tree(const PointSet& ps);

}  // namespace lpst
