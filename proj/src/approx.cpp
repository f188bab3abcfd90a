#include "lpst/approx.hpp"

#include <algorithm>
#include <cmath>

namespace lpst {

namespace {

double bisect(double lo, double hi, double tol) {
  double plo = approx_polynomial(lo);
  const double phi = approx_polynomial(hi);
  if (plo == 0) return lo;
  if (phi == 0) return hi;
  if ((plo > 0) == (phi > 0)) throw PreconditionError("polynomial root is not bracketed");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double pm = approx_polynomial(mid);
    if (pm == 0) return mid;
    if ((pm > 0) == (plo > 0)) {
      lo = mid;
      plo = pm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool longer(double cand, double best) {
  return cand > best + 1e-14 * std::max(1.0, std::fabs(best));
}

}  // namespace

double approx_polynomial(double x) {
  static constexpr double c[] = {-80, 128, 504, -768, -845, 1096, 256};
  double v = 0.0;
  for (int i = 6; i >= 0; --i) v = v * x + c[i];
  return v;
}

double algebra_residual(double x) {
  const double lhs = (2 * x - 1) / (2 * std::sqrt(5 - 8 * x) - 1);
  const double rhs = 1 - x * std::sqrt(4 * x * x - 1) - 2 * x * x;
  return lhs - rhs;
}

ApproxConstants approx_constant_f() {
  ApproxConstants k;
  k.f = bisect(0.54, 0.55, 1e-13);
  k.beta = 1 - k.f * std::sqrt(4 * k.f * k.f - 1) - 2 * k.f * k.f;
  if (!(k.beta > 0 && k.beta < 0.5)) throw PreconditionError("beta outside (0, 1/2)");
  return k;
}

AlgebraRootReport check_algebra_roots() {
  AlgebraRootReport r;
  r.residual_five_eighths = std::fabs(algebra_residual(5.0 / 8.0));
  r.residual_f = std::fabs(algebra_residual(approx_constant_f().f));
  r.fifth_root = bisect(0.57, 0.585, 1e-13);
  r.sixth_root = bisect(0.59, 0.6, 1e-13);
  r.residual_fifth = std::fabs(algebra_residual(r.fifth_root));
  r.residual_sixth = std::fabs(algebra_residual(r.sixth_root));
  r.ok = r.residual_five_eighths <= 1e-12 && r.residual_f <= 1e-9 &&
         r.residual_fifth > 1e-6 && r.residual_sixth > 1e-6;
  return r;
}

SpanningTree star(const PointSet& ps, int a) {
  ps.check_index(a);
  return star_tree(ps.n(), a);
}

SpanningTree wedge_tree(const PointSet& ps, int a, int b) {
  ps.check_index(a);
  ps.check_index(b);
  if (a == b) throw PreconditionError("wedge tree roots must differ");
  const int n = ps.n();
  std::vector<bool> near_a(n, false);
  for (int p = 0; p < n; ++p)
    near_a[p] = p == a || (p != b && compare_dist(ps[p], ps[a], ps[p], ps[b]) <= 0);
  EdgeList es;
  for (int v = 0; v < n; ++v)
    if (!near_a[v]) es.emplace_back(a, v);
  const Point& pa = ps[a];
  const Point& pb = ps[b];
  for (int p = 0; p < n; ++p) {
    if (!near_a[p] || p == a) continue;
    // The wedge side closer to ray ab is the nearest far-side ray between
    // ab and ap, turning from ap toward ab.
    const int side = orientation(pa, pb, ps[p]);
    int best = b;
    for (int v = 0; v < n; ++v) {
      if (near_a[v] || v == b) continue;
      if (orientation(pa, pb, ps[v]) != side) continue;
      if (orientation(pa, ps[v], ps[p]) != side) continue;
      if (orientation(pa, ps[best], ps[v]) == side) best = v;
    }
    es.emplace_back(p, best);
  }
  return SpanningTree(n, std::move(es));
}

SpanningTree alg_simple(const PointSet& ps) {
  const int n = ps.n();
  if (n < 2) throw PreconditionError("alg_simple needs at least 2 points");
  SpanningTree best = star(ps, 0);
  double best_len = tree_length(best, ps);
  auto consider = [&](SpanningTree t) {
    const double len = tree_length(t, ps);
    if (longer(len, best_len) || (!longer(best_len, len) && t < best)) {
      best = std::move(t);
      best_len = len;
    }
  };
  for (int a = 1; a < n; ++a) consider(star(ps, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) consider(wedge_tree(ps, a, b));
  return best;
}

}  // namespace lpst
