#include "lpst/bistar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpst {

namespace {

// Dynamic program for the points strictly left of the directed line A->B.
// In that frame "height" is the distance from line AB and the A-root sits on
// the left. Subproblem (p, q) covers the points below both p and q, right of
// ray Ap and left of ray Bq.
class SideSolver {
 public:
  SideSolver(const PointSet& ps, int a, int b, std::vector<int> pts)
      : ps_(ps), a_(a), b_(b), pts_(std::move(pts)) {
    const int m = static_cast<int>(pts_.size());
    z_.assign(m * m, kUnset);
    choice_.assign(m * m, -1);
    da_.resize(m);
    db_.resize(m);
    for (int i = 0; i < m; ++i) {
      da_[i] = dist(A(), P(i));
      db_[i] = dist(B(), P(i));
    }
  }

  // Returns the best total (excluding |AB|) and fills to_a per local index.
  double solve(std::vector<char>& to_a) {
    const int m = static_cast<int>(pts_.size());
    to_a.assign(m, 1);
    if (m == 0) return 0.0;
    double sum_a = 0, sum_b = 0;
    for (int i = 0; i < m; ++i) {
      sum_a += da_[i];
      sum_b += db_[i];
    }
    double best = sum_a;
    int best_p = -1, best_q = -1;
    bool top_to_a = true;
    if (sum_b > best) {
      best = sum_b;
      to_a.assign(m, 0);
      top_to_a = false;
      best_p = -2;
    }
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) {
        if (p == q || !valid(p, q)) continue;
        if (higher(p, q)) {
          // Top point goes to A: everything above q must be p or left of Ap.
          bool spans = true;
          double v = da_[p] + db_[q];
          for (int t = 0; t < m && spans; ++t) {
            if (t == p || t == q) continue;
            if (left_of_ap(p, t)) {
              v += da_[t];
            } else if (higher(t, q)) {
              spans = false;
            } else if (right_of_bq(q, t)) {
              v += db_[t];
            }
          }
          if (!spans) continue;
          v += z(p, q);
          if (v > best) {
            best = v;
            best_p = p;
            best_q = q;
            top_to_a = true;
          }
        } else {
          bool spans = true;
          double v = da_[p] + db_[q];
          for (int t = 0; t < m && spans; ++t) {
            if (t == p || t == q) continue;
            if (right_of_bq(q, t)) {
              v += db_[t];
            } else if (higher(t, p)) {
              spans = false;
            } else if (left_of_ap(p, t)) {
              v += da_[t];
            }
          }
          if (!spans) continue;
          v += z(p, q);
          if (v > best) {
            best = v;
            best_p = p;
            best_q = q;
            top_to_a = false;
          }
        }
      }
    if (best_p >= 0) {
      to_a.assign(m, 0);
      to_a[best_p] = 1;
      to_a[best_q] = 0;
      for (int t = 0; t < m; ++t) {
        if (t == best_p || t == best_q) continue;
        if (in_q(best_p, best_q, t)) continue;
        if (top_to_a)
          to_a[t] = left_of_ap(best_p, t) ? 1 : 0;
        else
          to_a[t] = right_of_bq(best_q, t) ? 0 : 1;
      }
      trace(best_p, best_q, to_a);
    }
    return best;
  }

 private:
  static constexpr double kUnset = -1.0;

  const Point& A() const { return ps_[a_]; }
  const Point& B() const { return ps_[b_]; }
  const Point& P(int i) const { return ps_[pts_[i]]; }

  // Strict total order by distance from line AB, index as tie-break.
  bool higher(int s, int t) const {
    const int c = cross_sign(A(), B(), P(t), P(s));
    if (c != 0) return c > 0;
    return pts_[s] < pts_[t];
  }
  bool left_of_ap(int p, int t) const { return orientation(A(), P(p), P(t)) > 0; }
  bool right_of_bq(int q, int t) const { return orientation(B(), P(q), P(t)) < 0; }
  bool valid(int p, int q) const { return !segments_cross(A(), P(p), B(), P(q)); }

  bool in_q(int p, int q, int t) const {
    if (t == p || t == q) return false;
    if (!higher(p, t) || !higher(q, t)) return false;
    return orientation(A(), P(p), P(t)) < 0 && orientation(B(), P(q), P(t)) > 0;
  }

  int highest_in_q(int p, int q) const {
    int k = -1;
    const int m = static_cast<int>(pts_.size());
    for (int t = 0; t < m; ++t)
      if (in_q(p, q, t) && (k < 0 || higher(t, k))) k = t;
    return k;
  }

  double z(int p, int q) {
    const int m = static_cast<int>(pts_.size());
    double& memo = z_[p * m + q];
    if (memo != kUnset) return memo;
    const int k = highest_in_q(p, q);
    if (k < 0) return memo = 0.0;
    // k to A: points of Q(p,q) left of Ak must also go to A.
    double via_a = da_[k];
    double via_b = db_[k];
    for (int t = 0; t < m; ++t) {
      if (t == k || !in_q(p, q, t)) continue;
      if (!in_q(k, q, t)) via_a += da_[t];
      if (!in_q(p, k, t)) via_b += db_[t];
    }
    via_a += z(k, q);
    via_b += z(p, k);
    choice_[p * m + q] = via_a >= via_b ? 0 : 1;
    return memo = std::max(via_a, via_b);
  }

  void trace(int p, int q, std::vector<char>& to_a) {
    const int m = static_cast<int>(pts_.size());
    for (;;) {
      const int k = highest_in_q(p, q);
      if (k < 0) return;
      const bool a_side = choice_[p * m + q] == 0;
      to_a[k] = a_side ? 1 : 0;
      for (int t = 0; t < m; ++t) {
        if (t == k || !in_q(p, q, t)) continue;
        if (a_side && !in_q(k, q, t)) to_a[t] = 1;
        if (!a_side && !in_q(p, k, t)) to_a[t] = 0;
      }
      if (a_side)
        p = k;
      else
        q = k;
    }
  }

  const PointSet& ps_;
  int a_, b_;
  std::vector<int> pts_;
  std::vector<double> z_;
  std::vector<int> choice_;
  std::vector<double> da_, db_;
};

bool longer(double cand, double best) {
  return cand > best + 1e-14 * std::max(1.0, std::fabs(best));
}

}  // namespace

BistarSolution bistar_on_subset(const PointSet& ps, int a, int b, const std::vector<int>& subset) {
  ps.check_index(a);
  ps.check_index(b);
  if (a == b) throw PreconditionError("bistar roots must differ");
  std::vector<int> left, right;
  for (int t : subset) {
    ps.check_index(t);
    if (t == a || t == b) throw PreconditionError("bistar subset contains a root");
    const int o = orientation(ps[a], ps[b], ps[t]);
    if (o == 0) throw PreconditionError("bistar point on the root line");
    (o > 0 ? left : right).push_back(t);
  }
  BistarSolution sol;
  std::vector<char> to_first;
  SideSolver up(ps, a, b, left);
  sol.length += up.solve(to_first);
  for (std::size_t i = 0; i < left.size(); ++i)
    sol.attach.emplace_back(left[i], to_first[i] ? a : b);
  // Below the line, walk from b to a so the same frame applies.
  SideSolver down(ps, b, a, right);
  sol.length += down.solve(to_first);
  for (std::size_t i = 0; i < right.size(); ++i)
    sol.attach.emplace_back(right[i], to_first[i] ? b : a);
  return sol;
}

SpanningTree longest_plane_bistar(const PointSet& ps, int a, int b) {
  ps.check_index(a);
  ps.check_index(b);
  if (a == b) throw PreconditionError("bistar roots must differ");
  std::vector<int> rest;
  for (int t = 0; t < ps.n(); ++t)
    if (t != a && t != b) rest.push_back(t);
  const BistarSolution sol = bistar_on_subset(ps, a, b, rest);
  EdgeList es{Edge(a, b)};
  for (auto [t, r] : sol.attach) es.emplace_back(t, r);
  return SpanningTree(ps.n(), std::move(es));
}

SpanningTree longest_diameter3_tree(const PointSet& ps) {
  const int n = ps.n();
  if (n < 2) throw PreconditionError("diameter-3 tree needs at least 2 points");
  SpanningTree best;
  double best_len = -1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      SpanningTree t = longest_plane_bistar(ps, a, b);
      const double len = tree_length(t, ps);
      if (best_len < 0 || longer(len, best_len) || (!longer(best_len, len) && t < best)) {
        best = std::move(t);
        best_len = len;
      }
    }
  return best;
}

}  // namespace lpst
