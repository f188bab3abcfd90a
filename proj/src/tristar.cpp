#include "lpst/tristar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>

#include "lpst/bistar.hpp"

namespace lpst {

namespace {

// Stand-ins for the seed points next to the apex: one on each root edge and
// one between them. They sit above every real point of the middle region.
constexpr int kNearA = -1;
constexpr int kNearB = -2;
constexpr int kNearApex = -3;

constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

using BistarCache = std::map<std::tuple<int, int, std::vector<int>>, BistarSolution>;

struct Partial {
  bool ok = true;
  double length = 0.0;
  std::vector<std::pair<int, int>> attach;  // (point, root)
};

// Roots a, b and apex c with c left of a->b. Points in the wedge at c.
struct Frame {
  const PointSet& ps;
  int a, b, c;

  const Point& dir(int id) const {
    if (id == kNearA) return ps[a];
    if (id == kNearB) return ps[b];
    return ps[id];
  }
  // strict counterclockwise order around the apex, a first
  bool precedes(int u, int v) const {
    if (u == v) return false;
    return orientation(ps[c], dir(u), dir(v)) > 0;
  }
};

// Each point of `group` goes to root x or root y. cant_x / cant_y mark points
// that may not use that root. Forcing propagates: a point whose x-edge would
// cross a forced y-edge must use y, and so on. Once stable, every bistar on
// the free points fits around the forced edges.
Partial assign_two(const PointSet& ps, BistarCache& cache, int x, int y, const std::vector<int>& group,
                   std::vector<char> cant_x, std::vector<char> cant_y) {
  Partial out;
  const std::size_t m = group.size();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (cant_x[i] && cant_y[i]) {
        out.ok = false;
        return out;
      }
      const Point& t = ps[group[i]];
      for (std::size_t j = 0; j < m && !cant_x[i] && !cant_y[i]; ++j) {
        if (j == i) continue;
        const Point& f = ps[group[j]];
        if (cant_x[j] && segments_cross(ps[x], t, ps[y], f)) cant_x[i] = changed = true;
        if (cant_y[j] && segments_cross(ps[y], t, ps[x], f)) cant_y[i] = changed = true;
      }
    }
  }
  std::vector<int> free;
  for (std::size_t i = 0; i < m; ++i) {
    const int t = group[i];
    if (cant_x[i] && cant_y[i]) {
      out.ok = false;
      return out;
    }
    if (cant_y[i]) {
      out.length += dist(ps[x], ps[t]);
      out.attach.emplace_back(t, x);
    } else if (cant_x[i]) {
      out.length += dist(ps[y], ps[t]);
      out.attach.emplace_back(t, y);
    } else {
      free.push_back(t);
    }
  }
  // forced edges of both kinds must not cross each other
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (cant_y[i] && cant_x[j] && segments_cross(ps[x], ps[group[i]], ps[y], ps[group[j]])) {
        out.ok = false;
        return out;
      }
  if (!free.empty()) {
    std::sort(free.begin(), free.end());
    auto key = std::make_tuple(x, y, free);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, bistar_on_subset(ps, x, y, free)).first;
    out.length += it->second.length;
    out.attach.insert(out.attach.end(), it->second.attach.begin(), it->second.attach.end());
  }
  return out;
}

// (p, p', r, q', q): region below the path a-p-q-b and below the lowest of
// p, q, r; apex edges may only reach points strictly between p' and q'.
struct State {
  int p, pp, r, qq, q;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = 0;
    for (int v : {s.p, s.pp, s.r, s.qq, s.q}) h = h * 1000003u + static_cast<std::size_t>(v + 8);
    return h;
  }
};

struct Option {
  double base = 0.0;
  bool has_child = false;
  State child{};
  std::vector<std::pair<int, int>> attach;  // (point, root) fixed by this option
};

// Points on c's side of ab. Points attached to a must not come after
// last_a around c, points attached to b must not come before first_b.
class MiddleDP {
 public:
  MiddleDP(const Frame& fr, BistarCache& cache, std::vector<int> pts, int last_a, int first_b)
      : fr_(fr), ps_(fr.ps), a_(fr.a), b_(fr.b), c_(fr.c), cache_(cache), pts_(std::move(pts)),
        last_a_(last_a), first_b_(first_b) {}

  double value() { return z(start()); }

  void attachments(std::vector<std::pair<int, int>>& out) {
    State s = start();
    for (;;) {
      z(s);
      auto opts = options(s);
      if (opts.empty()) return;
      const Option& o = opts[choice_.at(s)];
      out.insert(out.end(), o.attach.begin(), o.attach.end());
      if (!o.has_child) return;
      s = o.child;
    }
  }

 private:
  static State start() { return {kNearA, kNearA, kNearApex, kNearB, kNearB}; }

  const Point& at(int id) const { return ps_[id]; }
  // Endpoint used for the path segments a-p and q-b.
  const Point& path_end(int id) const { return id < 0 ? ps_[c_] : ps_[id]; }

  // Strict total order by distance from line ab, index as tie-break.
  bool higher(int s, int t) const {
    const int c = cross_sign(at(a_), at(b_), at(t), at(s));
    if (c != 0) return c > 0;
    return s < t;
  }
  bool below(int t, int id) const { return id < 0 || higher(id, t); }

  bool forbidden(int root, int t) const {
    return root == a_ ? fr_.precedes(last_a_, t) : fr_.precedes(t, first_b_);
  }

  bool in_region(const State& s, int t) const {
    if (t == s.p || t == s.q || t == s.r) return false;
    if (!below(t, s.p) || !below(t, s.q) || !below(t, s.r)) return false;
    const Point& pe = path_end(s.p);
    const Point& qe = path_end(s.q);
    return orientation(at(a_), pe, at(t)) == orientation(at(a_), pe, at(b_)) &&
           orientation(at(b_), qe, at(t)) == orientation(at(b_), qe, at(a_));
  }

  std::vector<int> region(const State& s) const {
    std::vector<int> r;
    for (int t : pts_)
      if (in_region(s, t)) r.push_back(t);
    return r;
  }

  bool apex_allowed(const State& s, int t) const { return fr_.precedes(s.pp, t) && fr_.precedes(t, s.qq); }

  bool absorb(Option& o, const Partial& part) {
    if (!part.ok) return false;
    o.base += part.length;
    o.attach.insert(o.attach.end(), part.attach.begin(), part.attach.end());
    return true;
  }

  // Points of `group` go to root x or to the apex. A point may use the apex
  // only inside the angular window and when its apex edge avoids x-k.
  bool split_with_apex(Option& o, const State& s, int x, int k, const std::vector<int>& group) {
    std::vector<char> cant_x(group.size()), cant_c(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      const int t = group[i];
      cant_c[i] = !apex_allowed(s, t) || segments_cross(at(c_), at(t), at(x), at(k));
      cant_x[i] = forbidden(x, t);
    }
    return absorb(o, assign_two(ps_, cache_, x, c_, group, cant_x, cant_c));
  }

  std::vector<int> minus(const std::vector<int>& from, const State& child, int k) const {
    std::vector<int> r;
    for (int t : from)
      if (t != k && !in_region(child, t)) r.push_back(t);
    return r;
  }

  std::vector<Option> options(const State& s) {
    const std::vector<int> reg = region(s);
    if (reg.empty()) return {};
    int k = reg[0];
    for (int t : reg)
      if (higher(t, k)) k = t;
    std::vector<Option> out;

    auto with_child = [&](int x, const State& child) {
      if (forbidden(x, k)) return;
      Option o;
      o.base = dist(at(x), at(k));
      o.attach.emplace_back(k, x);
      o.has_child = true;
      o.child = child;
      if (split_with_apex(o, s, x, k, minus(reg, child, k))) out.push_back(std::move(o));
    };
    // k takes root x; the points on the far side of x-k from the other root
    // y form a plain bistar, the rest choose between x and the apex.
    auto closing = [&](int x, int y) {
      if (forbidden(x, k)) return;
      Option o;
      o.base = dist(at(x), at(k));
      o.attach.emplace_back(k, x);
      std::vector<int> shared, rest;
      for (int t : reg) {
        if (t == k) continue;
        const bool y_side = orientation(at(x), at(k), at(t)) == orientation(at(x), at(k), at(y));
        (y_side ? shared : rest).push_back(t);
      }
      std::vector<char> cant_a(shared.size()), cant_b(shared.size());
      for (std::size_t i = 0; i < shared.size(); ++i) {
        cant_a[i] = forbidden(a_, shared[i]);
        cant_b[i] = forbidden(b_, shared[i]);
      }
      if (!absorb(o, assign_two(ps_, cache_, a_, b_, shared, cant_a, cant_b))) return;
      if (split_with_apex(o, s, x, k, rest)) out.push_back(std::move(o));
    };

    if (fr_.precedes(k, s.pp)) {
      with_child(a_, {k, s.pp, s.r, s.qq, s.q});
      closing(b_, a_);
    } else if (fr_.precedes(s.qq, k)) {
      with_child(b_, {s.p, s.pp, s.r, s.qq, k});
      closing(a_, b_);
    } else {
      Option o;
      o.base = dist(at(c_), at(k));
      o.attach.emplace_back(k, c_);
      o.has_child = true;
      o.child = {s.p, s.pp, k, s.qq, s.q};
      out.push_back(std::move(o));
      with_child(a_, {k, k, k, s.qq, s.q});
      with_child(b_, {s.p, s.pp, k, k, k});
    }
    return out;
  }

  double z(const State& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    auto opts = options(s);
    double best = opts.empty() ? 0.0 : kInfeasible;
    int best_i = -1;
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const double v = opts[i].base + (opts[i].has_child ? z(opts[i].child) : 0.0);
      if (v > best) {
        best = v;
        best_i = static_cast<int>(i);
      }
    }
    choice_[s] = best_i;
    memo_[s] = best;
    return best;
  }

  const Frame& fr_;
  const PointSet& ps_;
  int a_, b_, c_;
  BistarCache& cache_;
  std::vector<int> pts_;
  int last_a_, first_b_;
  std::unordered_map<State, double, StateHash> memo_;
  std::unordered_map<State, int, StateHash> choice_;
};

// Points on the far side of ab from the apex. Apex edges cross ab and are
// blocked by the triangle part only through the angular window
// (after_a, before_b). Processed deepest first; state is the last point sent
// to a and the last point sent to b.
class PocketDP {
 public:
  PocketDP(const Frame& fr, BistarCache& cache, const std::vector<int>& pts, int after_a, int before_b)
      : fr_(fr), ps_(fr.ps), a_(fr.a), b_(fr.b), c_(fr.c), cache_(cache), pts_(pts),
        after_a_(after_a), before_b_(before_b) {}

  double value() { return z({-1, -1}); }

  void attachments(std::vector<std::pair<int, int>>& out) {
    std::pair<int, int> s{-1, -1};
    for (;;) {
      z(s);
      auto opts = options(s);
      if (opts.empty()) return;
      const Step& o = opts[choice_.at(s)];
      out.insert(out.end(), o.attach.begin(), o.attach.end());
      if (!o.has_child) return;
      s = o.child;
    }
  }

 private:
  struct Step {
    double base = 0.0;
    bool has_child = false;
    std::pair<int, int> child{};
    std::vector<std::pair<int, int>> attach;
  };

  const Point& at(int id) const { return ps_[id]; }

  bool deeper(int s, int t) const {
    const int c = cross_sign(at(a_), at(b_), at(s), at(t));
    if (c != 0) return c > 0;
    return s < t;
  }

  bool apex_ok(int t) const { return fr_.precedes(after_a_, t) && fr_.precedes(t, before_b_); }

  bool in_region(const std::pair<int, int>& s, int t) const {
    const auto [la, lb] = s;
    if (t == la || t == lb) return false;
    if (la >= 0 && (!deeper(la, t) || orientation(at(a_), at(la), at(t)) != orientation(at(a_), at(la), at(b_))))
      return false;
    if (lb >= 0 && (!deeper(lb, t) || orientation(at(b_), at(lb), at(t)) != orientation(at(b_), at(lb), at(a_))))
      return false;
    return true;
  }

  std::vector<Step> options(const std::pair<int, int>& s) {
    std::vector<int> reg;
    for (int t : pts_)
      if (in_region(s, t)) reg.push_back(t);
    if (reg.empty()) return {};
    int k = reg[0];
    for (int t : reg)
      if (deeper(t, k)) k = t;
    std::vector<Step> out;

    if (apex_ok(k)) {
      // apex edge to the deepest point splits the rest between a and b
      Step o;
      o.base = dist(at(c_), at(k));
      o.attach.emplace_back(k, c_);
      std::vector<int> left, right;
      for (int t : reg) {
        if (t == k) continue;
        (orientation(at(c_), at(k), at(t)) == orientation(at(c_), at(k), at(a_)) ? left : right).push_back(t);
      }
      bool ok = true;
      for (auto [root, group] : {std::pair{a_, &left}, std::pair{b_, &right}}) {
        std::vector<char> cant_root(group->size()), cant_c(group->size());
        for (std::size_t i = 0; i < group->size(); ++i) cant_c[i] = !apex_ok((*group)[i]);
        Partial part = assign_two(ps_, cache_, root, c_, *group, cant_root, cant_c);
        if (!part.ok) {
          ok = false;
          break;
        }
        o.base += part.length;
        o.attach.insert(o.attach.end(), part.attach.begin(), part.attach.end());
      }
      if (ok) out.push_back(std::move(o));
    }
    for (auto [x, y] : {std::pair{a_, b_}, std::pair{b_, a_}}) {
      // x-k shuts off everything behind it from y and the apex
      Step o;
      o.base = dist(at(x), at(k));
      o.attach.emplace_back(k, x);
      for (int t : reg) {
        if (t == k) continue;
        if (orientation(at(x), at(k), at(t)) != orientation(at(x), at(k), at(y))) {
          o.base += dist(at(x), at(t));
          o.attach.emplace_back(t, x);
        }
      }
      o.has_child = true;
      o.child = x == a_ ? std::pair{k, s.second} : std::pair{s.first, k};
      out.push_back(std::move(o));
    }
    return out;
  }

  double z(const std::pair<int, int>& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    auto opts = options(s);
    double best = opts.empty() ? 0.0 : kInfeasible;
    int best_i = -1;
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const double v = opts[i].base + (opts[i].has_child ? z(opts[i].child) : 0.0);
      if (v > best) {
        best = v;
        best_i = static_cast<int>(i);
      }
    }
    choice_[s] = best_i;
    memo_[s] = best;
    return best;
  }

  const Frame& fr_;
  const PointSet& ps_;
  int a_, b_, c_;
  BistarCache& cache_;
  const std::vector<int>& pts_;
  int after_a_, before_b_;
  std::map<std::pair<int, int>, double> memo_;
  std::map<std::pair<int, int>, int> choice_;
};

struct Candidate {
  double length = 0.0;
  EdgeList edges;
};

// Tree containing apex-a and apex-b.
Candidate solve_with_apex(const PointSet& ps, int x, int y, int apex) {
  int a = x, b = y;
  if (orientation(ps[a], ps[b], ps[apex]) < 0) std::swap(a, b);
  std::vector<int> left, right, middle;
  const int side_b = orientation(ps[a], ps[apex], ps[b]);
  const int side_a = orientation(ps[b], ps[apex], ps[a]);
  for (int t = 0; t < ps.n(); ++t) {
    if (t == a || t == b || t == apex) continue;
    if (orientation(ps[a], ps[apex], ps[t]) != side_b)
      left.push_back(t);
    else if (orientation(ps[b], ps[apex], ps[t]) != side_a)
      right.push_back(t);
    else
      middle.push_back(t);
  }
  Candidate cand;
  cand.edges = {Edge(a, apex), Edge(b, apex)};
  std::vector<std::pair<int, int>> attach;
  const BistarSolution l = bistar_on_subset(ps, a, apex, left);
  const BistarSolution r = bistar_on_subset(ps, b, apex, right);
  attach.insert(attach.end(), l.attach.begin(), l.attach.end());
  attach.insert(attach.end(), r.attach.begin(), r.attach.end());

  std::vector<int> inner, pocket;
  for (int t : middle) (orientation(ps[a], ps[b], ps[t]) > 0 ? inner : pocket).push_back(t);
  const Frame fr{ps, a, b, apex};
  BistarCache cache;
  if (pocket.empty()) {
    MiddleDP dp(fr, cache, inner, kNearB, kNearA);
    dp.value();
    dp.attachments(attach);
  } else {
    // The pocket sees the inner part only through the last point on a and
    // the first point on b around the apex; try every such pair.
    std::vector<int> lasts{kNearA}, firsts;
    lasts.insert(lasts.end(), inner.begin(), inner.end());
    firsts = inner;
    firsts.push_back(kNearB);
    double best = kInfeasible;
    int best_la = kNearA, best_fb = kNearB;
    for (int la : lasts)
      for (int fb : firsts) {
        MiddleDP dp(fr, cache, inner, la, fb);
        const double in = dp.value();
        if (in == kInfeasible) continue;
        PocketDP pk(fr, cache, pocket, la, fb);
        const double v = in + pk.value();
        if (v > best) {
          best = v;
          best_la = la;
          best_fb = fb;
        }
      }
    MiddleDP dp(fr, cache, inner, best_la, best_fb);
    dp.value();
    dp.attachments(attach);
    PocketDP pk(fr, cache, pocket, best_la, best_fb);
    pk.value();
    pk.attachments(attach);
  }
  for (auto [t, root] : attach) cand.edges.emplace_back(t, root);
  std::sort(cand.edges.begin(), cand.edges.end());
  for (const Edge& e : cand.edges) cand.length += ps.length(e);
  return cand;
}

bool longer(double cand, double best) {
  return cand > best + 1e-14 * std::max(1.0, std::fabs(best));
}

}  // namespace

bool angular_preceq_c(int u, int v, int c, const PointSet& ps) {
  ps.check_index(u);
  ps.check_index(v);
  ps.check_index(c);
  if (u == c || v == c) throw PreconditionError("angular order needs points other than the centre");
  if (u == v) return true;
  // Sweep position: 0 on the leftward ray, 1 below, 2 on the rightward ray, 3 above.
  auto band = [&](int w) {
    const Point& p = ps[w];
    const Point& o = ps[c];
    if (p.y == o.y) return p.x < o.x ? 0 : 2;
    return p.y < o.y ? 1 : 3;
  };
  const int bu = band(u), bv = band(v);
  if (bu != bv) return bu < bv;
  return orientation(ps[c], ps[u], ps[v]) > 0;
}

SpanningTree longest_plane_tristar(const PointSet& ps, int a, int b, int c) {
  if (ps.n() < 3) throw PreconditionError("tristar needs at least 3 points");
  for (int r : {a, b, c}) ps.check_index(r);
  if (a == b || b == c || a == c) throw PreconditionError("tristar roots must be distinct");
  const auto hull = convex_hull(ps);
  for (int r : {a, b, c})
    if (std::find(hull.begin(), hull.end(), r) == hull.end())
      throw PreconditionError("tristar root " + std::to_string(r) + " is not a hull vertex");
  Candidate best;
  bool have = false;
  for (const auto& [x, y, apex] : {std::tuple{a, b, c}, std::tuple{b, c, a}, std::tuple{a, c, b}}) {
    Candidate cand = solve_with_apex(ps, x, y, apex);
    if (!have || longer(cand.length, best.length) ||
        (!longer(best.length, cand.length) && cand.edges < best.edges)) {
      best = std::move(cand);
      have = true;
    }
  }
  return SpanningTree(ps.n(), best.edges);
}

SpanningTree best_tristar_over_hull_triples(const PointSet& ps) {
  if (ps.n() < 3) throw PreconditionError("tristar needs at least 3 points");
  const auto hull = convex_hull(ps);
  SpanningTree best;
  double best_len = -1;
  const int h = static_cast<int>(hull.size());
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      for (int k = j + 1; k < h; ++k) {
        SpanningTree t = longest_plane_tristar(ps, hull[i], hull[j], hull[k]);
        const double len = tree_length(t, ps);
        if (best_len < 0 || longer(len, best_len) || (!longer(best_len, len) && t < best)) {
          best = std::move(t);
          best_len = len;
        }
      }
  return best;
}

}  // namespace lpst
