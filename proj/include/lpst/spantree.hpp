#pragma once

#include <vector>

#include "lpst/geom.hpp"

namespace lpst {

// Spanning tree over n labelled vertices. Edges are kept sorted canonically,
// so two trees with the same edge set compare equal.
class SpanningTree {
 public:
  SpanningTree() = default;
  // Throws PreconditionError unless the edges form a spanning tree on 0..n-1.
  SpanningTree(int n, EdgeList edges);

  int n() const { return n_; }
  const EdgeList& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool contains(const Edge& e) const;

  bool operator==(const SpanningTree&) const = default;
  // Lexicographic order of the canonical edge lists.
  bool operator<(const SpanningTree& o) const { return edges_ < o.edges_; }

 private:
  int n_ = 0;
  EdgeList edges_;
};

struct TreeMetrics {
  double length = 0.0;
  int hop_diameter = 0;
  bool plane = true;
};

double tree_length(const SpanningTree& t, const PointSet& ps);
bool is_plane(const SpanningTree& t, const PointSet& ps);
int hop_diameter(const SpanningTree& t);
bool is_caterpillar(const SpanningTree& t);
TreeMetrics tree_metrics(const SpanningTree& t, const PointSet& ps);

// Dual of the subdivision induced by the tree's chords on a convex point set.
// Throws PreconditionError if ps is not in convex position or t is not plane.
bool dual_is_path(const SpanningTree& t, const PointSet& ps);

// Same test given each vertex's position along the convex cycle.
bool dual_is_path_cyclic(const SpanningTree& t, const std::vector<int>& position);

SpanningTree star_tree(int n, int root);

}  // namespace lpst
