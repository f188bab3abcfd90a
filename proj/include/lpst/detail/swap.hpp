#pragma once

// Swap-neighbourhood search shared by the local search and the oracle scan.

#include <optional>
#include <utility>
#include <vector>

#include "lpst/localsearch.hpp"

namespace lpst::detail {

struct GeomModel {
  const PointSet& ps;
  using Length = double;
  int n() const { return ps.n(); }
  double len(const Edge& e) const { return ps.length(e); }
  // Exact sign of |e| - |f|.
  int cmp(const Edge& e, const Edge& f) const {
    return compare_dist(ps[e.u], ps[e.v], ps[f.u], ps[f.v]);
  }
  bool cross(const Edge& e, const Edge& f) const { return segments_cross(e, f, ps); }
};

struct FlatModel {
  const FlatConvexSet& fs;
  using Length = std::int64_t;
  int n() const { return fs.n(); }
  std::int64_t len(const Edge& e) const { return fs.flat_length(e); }
  int cmp(const Edge& e, const Edge& f) const {
    const auto a = len(e), b = len(f);
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  bool cross(const Edge& e, const Edge& f) const { return chords_cross_cyclic(e, f); }
};

template <class Model>
bool plane_under(const Model& m, const EdgeList& es) {
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (m.cross(es[i], es[j])) return false;
  return true;
}

// Edges on the tree path from s to t.
inline EdgeList tree_path(const std::vector<std::vector<int>>& adj, int s, int t) {
  std::vector<int> parent(adj.size(), -1);
  std::vector<int> stack{s};
  parent[s] = s;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == t) break;
    for (int w : adj[u])
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  EdgeList path;
  for (int v = t; v != s; v = parent[v]) path.emplace_back(v, parent[v]);
  return path;
}

template <class Model>
std::optional<BasicSwap<typename Model::Length>> best_swap(const SpanningTree& t, const Model& m) {
  using L = typename Model::Length;
  if (t.n() != m.n()) throw PreconditionError("tree and point set sizes differ");
  const EdgeList& tree = t.edges();
  if (!plane_under(m, tree)) throw PreconditionError("swap search requires a plane tree");
  const auto adj = t.adjacency();
  std::optional<BasicSwap<L>> best;
  for (int a = 0; a < m.n(); ++a)
    for (int b = a + 1; b < m.n(); ++b) {
      const Edge add(a, b);
      if (t.contains(add)) continue;
      EdgeList crossed;
      for (const Edge& e : tree)
        if (m.cross(add, e)) crossed.push_back(e);
      if (crossed.size() > 1) continue;
      const EdgeList cycle = tree_path(adj, a, b);
      for (const Edge& cd : cycle) {
        if (!crossed.empty() && !(crossed[0] == cd)) continue;
        if (m.cmp(cd, add) >= 0) continue;
        const L gain = m.len(add) - m.len(cd);
        const bool better = !best || gain > best->gain ||
                            (gain == best->gain && std::pair(add, cd) < std::pair(best->add, best->remove));
        if (better) best = BasicSwap<L>{add, cd, gain};
      }
    }
  return best;
}

template <class Model>
auto run_local(const Model& m, const SpanningTree& t0) {
  using L = typename Model::Length;
  SpanningTree t = t0;
  std::vector<BasicSwapStep<L>> trace;
  L total{};
  for (const Edge& e : t.edges()) total += m.len(e);
  while (auto s = best_swap(t, m)) {
    EdgeList es;
    for (const Edge& e : t.edges())
      if (!(e == s->remove)) es.push_back(e);
    es.push_back(s->add);
    t = SpanningTree(t.n(), std::move(es));
    total = L{};
    for (const Edge& e : t.edges()) total += m.len(e);
    trace.push_back({s->remove, s->add, total});
  }
  return std::pair{t, trace};
}

}  // namespace lpst::detail
