#include "lpst/convexopt.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "lpst/detail/swap.hpp"
#include "lpst/errors.hpp"

namespace lpst {

namespace {

std::vector<int> convex_order(const PointSet& ps, const char* what) {
  const auto hull = convex_hull(ps);
  if (static_cast<int>(hull.size()) != ps.n())
    throw PreconditionError(std::string(what) + " requires points in convex position");
  return hull;
}

}  // namespace

SpanningTree longest_plane_tree_convex(const PointSet& ps) {
  const int n = ps.n();
  if (n <= 1) return SpanningTree(n, {});
  const auto order = n >= 3 ? convex_order(ps, "longest_plane_tree_convex") : std::vector<int>{0, 1};
  auto len = [&](int i, int j) { return dist(ps[order[i]], ps[order[j]]); };

  // whole[i][j]: best plane tree on the run i..j.
  // closed[i][j]: best plane tree on the run i..j that uses the edge i-j.
  std::vector<std::vector<double>> whole(n, std::vector<double>(n, 0.0)), closed = whole;
  std::vector<std::vector<int>> whole_at(n, std::vector<int>(n, -1)), closed_at = whole_at;
  for (int span = 1; span < n; ++span)
    for (int i = 0; i + span < n; ++i) {
      const int j = i + span;
      // Without i-j the tree falls into runs i..k and k+1..j.
      double best = -1;
      for (int k = i; k < j; ++k) {
        const double v = whole[i][k] + whole[k + 1][j];
        if (v > best) {
          best = v;
          closed_at[i][j] = k;
        }
      }
      closed[i][j] = len(i, j) + best;
      // m is the farthest neighbour of i; nothing beyond m can reach i..m-1.
      best = -1;
      for (int m = i + 1; m <= j; ++m) {
        const double v = closed[i][m] + whole[m][j];
        if (v > best) {
          best = v;
          whole_at[i][j] = m;
        }
      }
      whole[i][j] = best;
    }

  EdgeList edges;
  std::vector<std::tuple<bool, int, int>> todo{{false, 0, n - 1}};
  while (!todo.empty()) {
    const auto [is_closed, i, j] = todo.back();
    todo.pop_back();
    if (i >= j) continue;
    if (is_closed) {
      edges.emplace_back(order[i], order[j]);
      const int k = closed_at[i][j];
      todo.emplace_back(false, i, k);
      todo.emplace_back(false, k + 1, j);
    } else {
      const int m = whole_at[i][j];
      todo.emplace_back(true, i, m);
      todo.emplace_back(false, m, j);
    }
  }
  return SpanningTree(n, std::move(edges));
}

SpanningTree caterpillar_from_spine(const std::vector<int>& spine_leaves) {
  const int s = static_cast<int>(spine_leaves.size());
  if (s == 0) return SpanningTree(2, {{0, 1}});
  int n = s;
  for (int k : spine_leaves) {
    if (k < 0) throw PreconditionError("negative leaf count");
    n += k;
  }
  EdgeList es;
  for (int i = 0; i + 1 < s; ++i) es.emplace_back(i, i + 1);
  int next = s;
  for (int i = 0; i < s; ++i)
    for (int k = 0; k < spine_leaves[i]; ++k) es.emplace_back(i, next++);
  return SpanningTree(n, std::move(es));
}

CaterpillarForm caterpillar_form(const SpanningTree& t) {
  const int n = t.n();
  if (n <= 2) return {n, {}};
  if (!is_caterpillar(t)) throw PreconditionError("tree is not a caterpillar");
  const auto deg = t.degrees();
  const auto adj = t.adjacency();
  auto on_spine = [&](int v) { return deg[v] >= 2; };
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (!on_spine(v)) continue;
    const auto spine_nbrs = std::count_if(adj[v].begin(), adj[v].end(), on_spine);
    if (spine_nbrs <= 1) start = v;
  }
  std::vector<int> counts;
  for (int prev = -1, v = start; v >= 0;) {
    int spine_nbrs = 0, next = -1;
    for (int w : adj[v])
      if (on_spine(w)) {
        ++spine_nbrs;
        if (w != prev) next = w;
      }
    counts.push_back(deg[v] - spine_nbrs);
    prev = v;
    v = next;
  }
  std::vector<int> rev(counts.rbegin(), counts.rend());
  return {n, std::min(counts, rev)};
}

bool caterpillars_isomorphic(const SpanningTree& a, const SpanningTree& b) {
  return caterpillar_form(a) == caterpillar_form(b);
}

std::vector<CaterpillarForm> all_caterpillar_forms(int n) {
  if (n < 2) throw PreconditionError("caterpillars need at least 2 vertices");
  if (n == 2) return {{2, {}}};
  std::vector<CaterpillarForm> out;
  for (int s = 1; s <= n - 2; ++s) {
    // ends carry at least one leaf, a lone spine vertex at least two
    std::vector<int> cur(s, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == s) {
        if (left != 0 || (s == 1 ? cur[0] < 2 : (cur[0] < 1 || cur[s - 1] < 1))) return;
        std::vector<int> rev(cur.rbegin(), cur.rend());
        if (cur <= rev) out.push_back({n, cur});
        return;
      }
      for (int k = 0; k <= left; ++k) {
        cur[i] = k;
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, n - s);
  }
  return out;
}

SpanningTree zigzag_embedding(const SpanningTree& cat, int m_plus_1) {
  if (m_plus_1 != cat.n()) throw PreconditionError("arc size differs from caterpillar size");
  const CaterpillarForm form = caterpillar_form(cat);
  const int n = form.n;
  if (n <= 1) return SpanningTree(n, {});
  if (n == 2) return SpanningTree(2, {{0, 1}});
  const auto& leaves = form.spine_leaves;
  const int s = static_cast<int>(leaves.size());
  const int m = n - 1;
  // The first spine vertex starts on the left when the spine is odd, so
  // the last one always finishes on the left.
  bool centre_left = s % 2 == 1;
  int lo = 0, hi = m;
  EdgeList es{{0, m}};
  auto place = [&] {
    if (centre_left) {
      es.emplace_back(lo, hi - 1);
      --hi;
    } else {
      es.emplace_back(hi, lo + 1);
      ++lo;
    }
  };
  for (int i = 0; i < s; ++i) {
    // the first spine vertex already used one leaf on the edge {0, m}
    const int fresh = i == 0 ? leaves[0] - 1 : leaves[i];
    for (int k = 0; k < fresh; ++k) place();
    if (i + 1 < s) {
      place();
      centre_left = !centre_left;
    }
  }
  return SpanningTree(n, std::move(es));
}

FlatConvexSet caterpillar_to_flat_arc(const SpanningTree& cat) {
  const int n = cat.n();
  if (n < 2) throw PreconditionError("caterpillar needs at least 2 vertices");
  const SpanningTree drawing = zigzag_embedding(cat, n);
  std::vector<std::int64_t> unit(n);
  std::iota(unit.begin(), unit.end(), 0);
  const auto covers = cover_sequence(drawing, FlatConvexSet::arc(unit));
  std::vector<std::int64_t> xs{0};
  for (int c : covers) xs.push_back(xs.back() + c);
  return FlatConvexSet::arc(std::move(xs));
}

bool is_unimodal_permutation(const std::vector<int>& s) {
  const int m = static_cast<int>(s.size());
  std::vector<char> seen(m + 1, 0);
  for (int v : s) {
    if (v < 1 || v > m || seen[v]) return false;
    seen[v] = 1;
  }
  const int peak = static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
  for (int i = 0; i < peak; ++i)
    if (s[i] >= s[i + 1]) return false;
  for (int i = peak; i + 1 < m; ++i)
    if (s[i] <= s[i + 1]) return false;
  return true;
}

std::optional<SpanningTree> face_exchange_improvement(const SpanningTree& t, const PointSet& ps) {
  const int n = ps.n();
  if (t.n() != n) throw PreconditionError("tree and point set sizes differ");
  if (n <= 3) return std::nullopt;
  const auto order = convex_order(ps, "face_exchange_improvement");
  if (!is_plane(t, ps)) throw PreconditionError("face_exchange_improvement requires a plane tree");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  struct Chord {
    int lo, hi;
  };
  std::vector<Chord> chords;
  for (const Edge& e : t.edges()) chords.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
  auto arc_inside = [](const Chord& c, int k) { return k >= c.lo && k < c.hi; };
  auto chord_inside = [](const Chord& outer, const Chord& c) { return outer.lo <= c.lo && c.hi <= outer.hi; };
  const double base = tree_length(t, ps);
  const auto adj = t.adjacency();
  std::optional<SpanningTree> best;
  double best_len = base * (1 + 1e-14);
  // One face per boundary arc, as in dual_is_path.
  for (int k = 0; k < n; ++k) {
    std::set<int> verts{k, (k + 1) % n};
    int degree = 0;
    for (std::size_t ci = 0; ci < chords.size(); ++ci) {
      bool separated = false;
      for (std::size_t cj = 0; cj < chords.size() && !separated; ++cj)
        if (cj != ci) separated = arc_inside(chords[cj], k) != chord_inside(chords[cj], chords[ci]);
      if (!separated) {
        ++degree;
        verts.insert(chords[ci].lo);
        verts.insert(chords[ci].hi);
      }
    }
    if (degree < 3) continue;
    // Any chord between two vertices of the face stays inside it.
    for (int u : verts)
      for (int v : verts) {
        if (u >= v) continue;
        const Edge add(order[u], order[v]);
        if (t.contains(add)) continue;
        for (const Edge& drop : detail::tree_path(adj, add.u, add.v)) {
          EdgeList es;
          for (const Edge& e : t.edges())
            if (!(e == drop)) es.push_back(e);
          es.push_back(add);
          SpanningTree cand(n, std::move(es));
          const double len = tree_length(cand, ps);
          if (len > best_len) {
            best_len = len;
            best = std::move(cand);
          }
        }
      }
  }
  return best;
}

}  // namespace lpst
