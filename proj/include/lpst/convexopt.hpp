#pragma once

#include <optional>
#include <vector>

#include "lpst/flatconvex.hpp"
#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

// Exact longest plane spanning tree for points in convex position, by
// interval DP over contiguous runs of the hull order. O(n^3).
SpanningTree longest_plane_tree_convex(const PointSet& ps);

// Caterpillar up to isomorphism: leaf counts along the spine (the path left
// after deleting all leaves). n = 1 and n = 2 have an empty spine.
struct CaterpillarForm {
  int n = 0;
  std::vector<int> spine_leaves;
  bool operator==(const CaterpillarForm&) const = default;
};

// Spine with the given leaf counts; vertex i < s is the i-th spine vertex.
SpanningTree caterpillar_from_spine(const std::vector<int>& spine_leaves);
// Canonical form, oriented so the leaf-count list is the lexicographically
// smaller of its two readings. Throws PreconditionError if t is not a caterpillar.
CaterpillarForm caterpillar_form(const SpanningTree& t);
bool caterpillars_isomorphic(const SpanningTree& a, const SpanningTree& b);
// Every caterpillar on n >= 2 vertices up to isomorphism, in canonical form,
// sorted by spine length then leaf counts.
std::vector<CaterpillarForm> all_caterpillar_forms(int n);

// Zigzag drawing of a caterpillar on arc positions 0..m (m + 1 = number of
// vertices). Contains {0, m}; each new edge joins the current outer edge's
// centre to the free position next to the other end.
SpanningTree zigzag_embedding(const SpanningTree& cat, int m_plus_1);

// Single flat arc whose gaps equal the covers of the zigzag drawing.
FlatConvexSet caterpillar_to_flat_arc(const SpanningTree& cat);

bool is_unimodal_permutation(const std::vector<int>& s);

// For a plane tree on a convex set: if some face of the subdivision touches
// three or more tree edges, add a chord inside that face and drop an edge of
// the closed cycle. Returns the longest such tree if it beats t.
std::optional<SpanningTree> face_exchange_improvement(const SpanningTree& t, const PointSet& ps);

}  // namespace lpst
