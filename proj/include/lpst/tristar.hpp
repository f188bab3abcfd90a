#pragma once

#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

// u precedes-or-equals v when sweeping counterclockwise around c starting
// from the leftward horizontal ray.
bool angular_preceq_c(int u, int v, int c, const PointSet& ps);

// Longest plane spanning tree made of two of the three root-root edges plus
// one edge from every other point to one of the roots a, b, c. The roots must
// be convex hull vertices.
SpanningTree longest_plane_tristar(const PointSet& ps, int a, int b, int c);

// Best tristar over all triples of hull vertices.
SpanningTree best_tristar_over_hull_triples(const PointSet& ps);

}  // namespace lpst
