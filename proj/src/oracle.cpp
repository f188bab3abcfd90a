#include "lpst/oracle.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cmath>
#include <iostream>
#include <numeric>
#include <string>

#include "lpst/detail/swap.hpp"

namespace lpst {

namespace {

constexpr int kMaxEdges = kMaxOraclePoints * (kMaxOraclePoints - 1) / 2;
using Mask = std::bitset<kMaxEdges>;

// Complete graph on n points with lengths, exact length ranks and pairwise
// crossing masks, edges indexed in lexicographic order.
template <class L>
struct Table {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> index;  // n*u+v -> edge index
  std::vector<L> len;
  std::vector<int> rank;  // equal lengths share a rank
  std::vector<Mask> cross;

  int id(const Edge& e) const { return index[e.u * n + e.v]; }
};

template <class L, class LenFn, class CmpFn, class CrossFn>
Table<L> build_table(int n, LenFn len, CmpFn cmp, CrossFn crosses) {
  Table<L> t;
  t.n = n;
  t.index.assign(n * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      t.index[u * n + v] = static_cast<int>(t.edges.size());
      t.edges.emplace_back(u, v);
    }
  const int m = static_cast<int>(t.edges.size());
  t.len.resize(m);
  for (int i = 0; i < m; ++i) t.len[i] = len(t.edges[i]);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cmp(t.edges[a], t.edges[b]) < 0; });
  t.rank.assign(m, 0);
  for (int i = 1; i < m; ++i)
    t.rank[order[i]] = t.rank[order[i - 1]] +
                       (cmp(t.edges[order[i - 1]], t.edges[order[i]]) < 0 ? 1 : 0);
  t.cross.assign(m, Mask{});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(t.edges[i], t.edges[j])) {
        t.cross[i].set(j);
        t.cross[j].set(i);
      }
  return t;
}

void check_cap(int n, int cap) {
  if (cap > kMaxOraclePoints)
    throw PreconditionError("oracle cap cannot exceed " + std::to_string(kMaxOraclePoints));
  if (n > cap)
    throw CapExceeded("oracle refuses n=" + std::to_string(n) + " above cap " +
                      std::to_string(cap));
  if (n > kDefaultOracleCap)
    std::cerr << "warning: brute-force enumeration at n=" << n
              << " exceeds the default cap and may take very long\n";
}

Table<double> geom_table(const PointSet& ps) {
  return build_table<double>(
      ps.n(), [&](const Edge& e) { return ps.length(e); },
      [&](const Edge& a, const Edge& b) {
        return compare_dist(ps[a.u], ps[a.v], ps[b.u], ps[b.v]);
      },
      [&](const Edge& a, const Edge& b) { return segments_cross(a, b, ps); });
}

Table<std::int64_t> flat_table(const FlatConvexSet& f) {
  return build_table<std::int64_t>(
      f.n(), [&](const Edge& e) { return f.flat_length(e); },
      [&](const Edge& a, const Edge& b) {
        const auto x = f.flat_length(a), y = f.flat_length(b);
        return x < y ? -1 : (x > y ? 1 : 0);
      },
      [](const Edge& a, const Edge& b) { return chords_cross_cyclic(a, b); });
}

// Include-first backtracking over the lexicographic edge list. Forest
// components are labelled by their largest vertex; once every edge at a
// vertex below u has been decided, a component entirely below u can never
// grow again, so the branch is dead.
template <class L>
class Enumerator {
 public:
  Enumerator(const Table<L>& t, const std::function<void(const std::vector<int>&)>& visit)
      : t_(t), visit_(visit) {}

  std::int64_t run() {
    std::array<int, kMaxOraclePoints> comp{};
    for (int v = 0; v < t_.n; ++v) comp[v] = v;
    if (t_.n == 1) {
      visit_(chosen_);
      return 1;
    }
    rec(0, comp);
    return count_;
  }

 private:
  void rec(int e, const std::array<int, kMaxOraclePoints>& comp) {
    const int n = t_.n;
    const int need = n - 1 - static_cast<int>(chosen_.size());
    if (need == 0) {
      ++count_;
      visit_(chosen_);
      return;
    }
    const int m = static_cast<int>(t_.edges.size());
    if (m - e < need) return;
    const Edge& edge = t_.edges[e];
    if (e == 0 || t_.edges[e - 1].u != edge.u)
      for (int v = 0; v < edge.u; ++v)
        if (comp[v] < edge.u) return;
    const int cu = comp[edge.u], cv = comp[edge.v];
    if (cu != cv && (t_.cross[e] & mask_).none()) {
      auto next = comp;
      const int label = std::max(cu, cv);
      for (int w = 0; w < n; ++w)
        if (next[w] == cu || next[w] == cv) next[w] = label;
      chosen_.push_back(e);
      mask_.set(e);
      rec(e + 1, next);
      mask_.reset(e);
      chosen_.pop_back();
    }
    rec(e + 1, comp);
  }

  const Table<L>& t_;
  const std::function<void(const std::vector<int>&)>& visit_;
  std::vector<int> chosen_;
  Mask mask_;
  std::int64_t count_ = 0;
};

template <class L>
EdgeList to_edges(const Table<L>& t, const std::vector<int>& ids) {
  EdgeList es;
  es.reserve(ids.size());
  for (int i : ids) es.push_back(t.edges[i]);
  return es;
}

template <class L>
std::int64_t enumerate_ids(const Table<L>& t,
                           const std::function<void(const std::vector<int>&)>& visit) {
  return Enumerator<L>(t, visit).run();
}

int hop_diameter_ids(int n, const std::vector<Edge>& edges, const std::vector<int>& ids) {
  if (n <= 1) return 0;
  std::array<std::array<int, kMaxOraclePoints>, kMaxOraclePoints> adj{};
  std::array<int, kMaxOraclePoints> deg{};
  for (int i : ids) {
    const Edge& e = edges[i];
    adj[e.u][deg[e.u]++] = e.v;
    adj[e.v][deg[e.v]++] = e.u;
  }
  auto sweep = [&](int src) {
    std::array<int, kMaxOraclePoints> dist;
    dist.fill(-1);
    std::array<int, kMaxOraclePoints> queue{};
    int head = 0, tail = 0;
    queue[tail++] = src;
    dist[src] = 0;
    int far = src;
    while (head < tail) {
      const int u = queue[head++];
      if (dist[u] > dist[far]) far = u;
      for (int k = 0; k < deg[u]; ++k)
        if (dist[adj[u][k]] < 0) {
          dist[adj[u][k]] = dist[u] + 1;
          queue[tail++] = adj[u][k];
        }
    }
    return std::pair{far, dist[far]};
  };
  return sweep(sweep(0).first).second;
}

// Strictly longer beats the incumbent; for doubles a relative slack absorbs
// summation-order noise so that near-equal trees keep the lexicographic winner.
bool longer(double cand, double best) {
  return cand > best + 1e-14 * std::max(1.0, std::fabs(best));
}
bool longer(std::int64_t cand, std::int64_t best) { return cand > best; }

template <class L>
BasicOracleResult<L> best_tree(const Table<L>& t, int max_diameter) {
  bool found = false;
  std::vector<int> best_ids;
  L best{};
  const std::int64_t count = enumerate_ids(t, [&](const std::vector<int>& ids) {
    if (max_diameter >= 0 && hop_diameter_ids(t.n, t.edges, ids) > max_diameter) return;
    L s{};
    for (int i : ids) s += t.len[i];
    if (!found || longer(s, best)) {
      found = true;
      best = s;
      best_ids = ids;
    }
  });
  if (!found) throw PreconditionError("no plane spanning tree satisfies the diameter bound");
  return {SpanningTree(t.n, to_edges(t, best_ids)), best, count};
}

template <class L>
BasicOracleResult<L> kruskal_max(const Table<L>& t) {
  std::vector<int> order(t.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t.rank[a] > t.rank[b]; });
  std::vector<int> parent(t.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  EdgeList es;
  L s{};
  for (int i : order) {
    const int a = find(t.edges[i].u), b = find(t.edges[i].v);
    if (a == b) continue;
    parent[a] = b;
    es.push_back(t.edges[i]);
    s += t.len[i];
  }
  return {SpanningTree(t.n, std::move(es)), s, 1};
}

template <class L>
struct TableModel {
  const Table<L>& t;
  using Length = L;
  int n() const { return t.n; }
  L len(const Edge& e) const { return t.len[t.id(e)]; }
  int cmp(const Edge& a, const Edge& b) const {
    const int x = t.rank[t.id(a)], y = t.rank[t.id(b)];
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  bool cross(const Edge& a, const Edge& b) const { return t.cross[t.id(a)].test(t.id(b)); }
};

template <class L>
std::vector<std::pair<SpanningTree, L>> scan(const Table<L>& t) {
  std::vector<std::pair<SpanningTree, L>> out;
  const TableModel<L> model{t};
  enumerate_ids(t, [&](const std::vector<int>& ids) {
    SpanningTree tree(t.n, to_edges(t, ids));
    if (detail::best_swap(tree, model)) return;
    L s{};
    for (int i : ids) s += t.len[i];
    out.emplace_back(std::move(tree), s);
  });
  return out;
}

}  // namespace

std::int64_t enumerate_plane_spanning_trees(const PointSet& ps, const TreeVisitor& visit,
                                            int cap) {
  check_cap(ps.n(), cap);
  const auto t = geom_table(ps);
  return enumerate_ids(t, [&](const std::vector<int>& ids) { visit(to_edges(t, ids)); });
}

std::int64_t enumerate_plane_spanning_trees(const FlatConvexSet& f, const TreeVisitor& visit,
                                            int cap) {
  check_cap(f.n(), cap);
  const auto t = flat_table(f);
  return enumerate_ids(t, [&](const std::vector<int>& ids) { visit(to_edges(t, ids)); });
}

OracleResult longest_plane_tree_bruteforce(const PointSet& ps, int cap) {
  check_cap(ps.n(), cap);
  return best_tree(geom_table(ps), -1);
}

FlatOracleResult longest_plane_tree_bruteforce(const FlatConvexSet& f, int cap) {
  check_cap(f.n(), cap);
  return best_tree(flat_table(f), -1);
}

OracleResult longest_plane_tree_diameter_at_most(const PointSet& ps, int d, int cap) {
  if (d < 1) throw PreconditionError("diameter bound must be at least 1");
  check_cap(ps.n(), cap);
  return best_tree(geom_table(ps), d);
}

FlatOracleResult longest_plane_tree_diameter_at_most(const FlatConvexSet& f, int d, int cap) {
  if (d < 1) throw PreconditionError("diameter bound must be at least 1");
  check_cap(f.n(), cap);
  return best_tree(flat_table(f), d);
}

std::vector<SpanningTree> all_longest_plane_trees(const FlatConvexSet& f, int cap) {
  check_cap(f.n(), cap);
  const auto t = flat_table(f);
  std::vector<SpanningTree> best;
  std::int64_t best_len = -1;
  enumerate_ids(t, [&](const std::vector<int>& ids) {
    std::int64_t s = 0;
    for (int i : ids) s += t.len[i];
    if (s > best_len) {
      best_len = s;
      best.clear();
    }
    if (s == best_len) best.emplace_back(t.n, to_edges(t, ids));
  });
  return best;
}

OracleResult longest_crossing_tree(const PointSet& ps) {
  if (ps.n() < 2) throw PreconditionError("crossing tree needs at least 2 points");
  if (ps.n() > 200) throw PreconditionError("crossing tree limited to 200 points");
  // Kruskal on a dense table; crossings are irrelevant here.
  Table<double> t;
  t.n = ps.n();
  t.index.assign(t.n * t.n, -1);
  for (int u = 0; u < t.n; ++u)
    for (int v = u + 1; v < t.n; ++v) {
      t.index[u * t.n + v] = static_cast<int>(t.edges.size());
      t.edges.emplace_back(u, v);
      t.len.push_back(ps.length(t.edges.back()));
    }
  std::vector<int> order(t.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return compare_dist(ps[t.edges[a].u], ps[t.edges[a].v], ps[t.edges[b].u],
                        ps[t.edges[b].v]) > 0;
  });
  t.rank.assign(t.edges.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    t.rank[order[i]] = static_cast<int>(order.size() - i);
  return kruskal_max(t);
}

FlatOracleResult longest_crossing_tree(const FlatConvexSet& f) {
  Table<std::int64_t> t;
  t.n = f.n();
  for (int u = 0; u < t.n; ++u)
    for (int v = u + 1; v < t.n; ++v) {
      t.edges.emplace_back(u, v);
      t.len.push_back(f.flat_length(t.edges.back()));
    }
  t.rank.assign(t.len.begin(), t.len.end());
  return kruskal_max(t);
}

std::vector<std::pair<SpanningTree, double>> local_optima_scan(const PointSet& ps, int cap) {
  check_cap(ps.n(), cap);
  return scan(geom_table(ps));
}

std::vector<std::pair<SpanningTree, std::int64_t>> local_optima_scan(const FlatConvexSet& f,
                                                                     int cap) {
  check_cap(f.n(), cap);
  return scan(flat_table(f));
}

namespace {

void check_roots(const PointSet& ps, std::initializer_list<int> roots) {
  for (int r : roots) ps.check_index(r);
  for (auto i = roots.begin(); i != roots.end(); ++i)
    for (auto j = i + 1; j != roots.end(); ++j)
      if (*i == *j) throw PreconditionError("roots must be distinct");
}

// Tries every base edge set extended by every root choice for the rest.
OracleResult best_by_assignment(const PointSet& ps, const std::vector<int>& roots,
                                const std::vector<EdgeList>& bases) {
  std::vector<int> rest;
  for (int t = 0; t < ps.n(); ++t)
    if (std::find(roots.begin(), roots.end(), t) == roots.end()) rest.push_back(t);
  const std::size_t k = roots.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < rest.size(); ++i) total *= k;
  OracleResult out;
  bool found = false;
  for (const EdgeList& base : bases)
    for (std::size_t code = 0; code < total; ++code) {
      EdgeList es = base;
      std::size_t m = code;
      for (int t : rest) {
        es.emplace_back(t, roots[m % k]);
        m /= k;
      }
      SpanningTree tree(ps.n(), std::move(es));
      if (!is_plane(tree, ps)) continue;
      ++out.count_enumerated;
      const double len = tree_length(tree, ps);
      if (!found || longer(len, out.best_length) ||
          (!longer(out.best_length, len) && tree < out.best_tree)) {
        found = true;
        out.best_length = len;
        out.best_tree = std::move(tree);
      }
    }
  return out;
}

}  // namespace

OracleResult bistar_by_assignment(const PointSet& ps, int a, int b, int cap) {
  check_cap(ps.n(), cap);
  check_roots(ps, {a, b});
  return best_by_assignment(ps, {a, b}, {{Edge(a, b)}});
}

OracleResult tristar_by_assignment(const PointSet& ps, int a, int b, int c, int cap) {
  check_cap(ps.n(), cap);
  check_roots(ps, {a, b, c});
  return best_by_assignment(ps, {a, b, c},
                            {{Edge(a, c), Edge(b, c)}, {Edge(a, b), Edge(b, c)}, {Edge(a, b), Edge(a, c)}});
}

}  // namespace lpst
