#include "lpst/spantree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace lpst {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Returns (farthest vertex, its distance) from src.
std::pair<int, int> bfs_far(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  int best = src;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (d[u] > d[best]) best = u;
    for (int w : adj[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push(w);
      }
  }
  return {best, d[best]};
}

}  // namespace

SpanningTree::SpanningTree(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw PreconditionError("tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n - 1)
    throw PreconditionError("tree on " + std::to_string(n) + " vertices needs " +
                            std::to_string(n - 1) + " edges, got " +
                            std::to_string(edges_.size()));
  std::sort(edges_.begin(), edges_.end());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n || e.u == e.v)
      throw PreconditionError("invalid edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    const int a = find_root(parent, e.u), b = find_root(parent, e.v);
    if (a == b) throw PreconditionError("edges contain a cycle");
    parent[a] = b;
  }
}

std::vector<std::vector<int>> SpanningTree::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> SpanningTree::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool SpanningTree::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

double tree_length(const SpanningTree& t, const PointSet& ps) {
  if (t.n() != ps.n()) throw PreconditionError("tree and point set sizes differ");
  double s = 0.0;
  for (const Edge& e : t.edges()) s += ps.length(e);
  return s;
}

bool is_plane(const SpanningTree& t, const PointSet& ps) {
  if (t.n() != ps.n()) throw PreconditionError("tree and point set sizes differ");
  const EdgeList& es = t.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (segments_cross(es[i], es[j], ps)) return false;
  return true;
}

int hop_diameter(const SpanningTree& t) {
  if (t.n() <= 1) return 0;
  const auto adj = t.adjacency();
  const int far = bfs_far(adj, 0).first;
  return bfs_far(adj, far).second;
}

bool is_caterpillar(const SpanningTree& t) {
  const auto deg = t.degrees();
  std::vector<int> spine_deg(t.n(), 0);
  for (const Edge& e : t.edges())
    if (deg[e.u] > 1 && deg[e.v] > 1) {
      ++spine_deg[e.u];
      ++spine_deg[e.v];
    }
  return std::all_of(spine_deg.begin(), spine_deg.end(), [](int d) { return d <= 2; });
}

TreeMetrics tree_metrics(const SpanningTree& t, const PointSet& ps) {
  return {tree_length(t, ps), hop_diameter(t), is_plane(t, ps)};
}

bool dual_is_path_cyclic(const SpanningTree& t, const std::vector<int>& position) {
  const int n = t.n();
  if (n <= 2) return true;
  struct Chord {
    int lo, hi;
  };
  std::vector<Chord> chords;
  for (const Edge& e : t.edges()) {
    const int a = position[e.u], b = position[e.v];
    chords.push_back({std::min(a, b), std::max(a, b)});
  }
  // Regions are cut by the chords from a closed curve through the points, so
  // an edge between neighbours still cuts off a thin region of its own.
  // Arc k joins positions k and k+1 (mod n). A chord's inside is arcs lo..hi-1.
  auto arc_inside = [](const Chord& c, int k) { return k >= c.lo && k < c.hi; };
  auto chord_inside = [](const Chord& outer, const Chord& c) {
    return outer.lo <= c.lo && c.hi <= outer.hi;
  };
  // Faces of a non-crossing chord tree correspond one-to-one with boundary arcs.
  std::vector<int> face_deg(n, 0);
  for (std::size_t ci = 0; ci < chords.size(); ++ci) {
    int touching = 0;
    for (int k = 0; k < n; ++k) {
      bool separated = false;
      for (std::size_t cj = 0; cj < chords.size() && !separated; ++cj) {
        if (cj == ci) continue;
        const bool arc_in = arc_inside(chords[cj], k);
        const bool chord_in = chord_inside(chords[cj], chords[ci]);
        separated = arc_in != chord_in;
      }
      if (!separated) {
        ++face_deg[k];
        ++touching;
      }
    }
    if (touching != 2) throw PreconditionError("tree chords cross in convex order");
  }
  return std::all_of(face_deg.begin(), face_deg.end(), [](int d) { return d <= 2; });
}

bool dual_is_path(const SpanningTree& t, const PointSet& ps) {
  if (t.n() != ps.n()) throw PreconditionError("tree and point set sizes differ");
  const int n = ps.n();
  if (n <= 2) return true;
  const auto hull = convex_hull(ps);
  if (static_cast<int>(hull.size()) != n)
    throw PreconditionError("dual_is_path requires convex position");
  if (!is_plane(t, ps)) throw PreconditionError("dual_is_path requires a plane tree");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[hull[i]] = i;
  return dual_is_path_cyclic(t, pos);
}

SpanningTree star_tree(int n, int root) {
  if (root < 0 || root >= n) throw PreconditionError("star root out of range");
  EdgeList es;
  for (int i = 0; i < n; ++i)
    if (i != root) es.emplace_back(root, i);
  return SpanningTree(n, std::move(es));
}

}  // namespace lpst
