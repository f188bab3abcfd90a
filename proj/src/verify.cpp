#include "lpst/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "lpst/approx.hpp"
#include "lpst/bistar.hpp"
#include "lpst/convexopt.hpp"
#include "lpst/errors.hpp"
#include "lpst/flatconvex.hpp"
#include "lpst/generators.hpp"
#include "lpst/localsearch.hpp"
#include "lpst/oracle.hpp"
#include "lpst/tristar.hpp"

namespace lpst {

bool SuiteResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}
std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

struct Checks {
  std::vector<CheckResult> list;
  void add(std::string name, std::string measured, std::string expected, bool pass) {
    list.push_back({std::move(name), std::move(measured), std::move(expected), pass});
  }
};

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any task is rethrown.
void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (int i; (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void constants_suite(Checks& out, int) {
  const auto start = std::chrono::steady_clock::now();
  const ApproxConstants c = approx_constant_f();
  const AlgebraRootReport r = check_algebra_roots();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double p = std::fabs(approx_polynomial(c.f));
  out.add("|P(f)|", num(p), "<= 1e-10", p <= 1e-10);
  out.add("f", num(c.f), "0.546723 +- 1e-5", std::fabs(c.f - 0.546723) <= 1e-5);
  out.add("beta", num(c.beta), "0.1604 +- 1e-3", std::fabs(c.beta - 0.1604) <= 1e-3);
  out.add("beta identity residual at f", num(std::fabs(r.residual_f)), "<= 1e-9", std::fabs(r.residual_f) <= 1e-9);
  out.add("original equation residual at 5/8", num(std::fabs(r.residual_five_eighths)), "<= 1e-12",
          std::fabs(r.residual_five_eighths) <= 1e-12);
  out.add("runtime seconds", num(secs), "< 1", secs < 1.0);
}

void approx_suite(Checks& out, int jobs) {
  const double f = approx_constant_f().f;
  constexpr int kCount = 200;
  std::vector<double> ratio(kCount);
  std::vector<char> plane(kCount);
  parallel_for(kCount, jobs, [&](int i) {
    const int n = 4 + i % 6;
    const PointSet ps = random_general_position(n, 20000 + i);
    const SpanningTree t = alg_simple(ps);
    plane[i] = is_plane(t, ps);
    ratio[i] = tree_length(t, ps) / longest_plane_tree_bruteforce(ps).best_length;
  });
  int violations = 0;
  for (int i = 0; i < kCount; ++i)
    if (!plane[i] || ratio[i] < f * (1 - 1e-12)) ++violations;
  out.add("instances (n = 4..9)", num(kCount), "200", true);
  out.add("violations of alg_simple >= f * optimum", num(violations), "0", violations == 0);
  out.add("worst alg_simple / optimum", num(*std::min_element(ratio.begin(), ratio.end())), ">= " + num(f),
          violations == 0);
}

FlatConvexSet random_gap_arc(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gap(1, 9);
  std::vector<std::int64_t> xs{0};
  while (static_cast<int>(xs.size()) < n) xs.push_back(xs.back() + gap(rng));
  return FlatConvexSet::arc(std::move(xs));
}

void flat_suite(Checks& out, int jobs) {
  constexpr double kEps = 1e-6;
  std::vector<FlatConvexSet> arcs;
  for (int n = 4; n <= 9; ++n) {
    arcs.push_back(arc_Pn(n - 1));
    for (int s = 0; s < 10; ++s) arcs.push_back(random_gap_arc(n, 40000 + 100 * n + s));
  }
  std::vector<double> ratio(arcs.size());
  parallel_for(static_cast<int>(arcs.size()), jobs, [&](int i) {
    const PointSet ps = realize(arcs[i], kEps);
    ratio[i] = tree_length(alg_simple(ps), ps) / longest_crossing_tree(ps).best_length;
  });
  const double bound = 2.0 / 3.0 - 1e-3;
  const auto violations = std::count_if(ratio.begin(), ratio.end(), [&](double r) { return r < bound; });
  out.add("realized arcs (n = 4..9, eps 1e-6)", num(static_cast<int>(arcs.size())), "66", true);
  out.add("violations of alg_simple >= (2/3 - 1e-3) * crossing tree", num(static_cast<int>(violations)), "0",
          violations == 0);
  out.add("worst alg_simple / crossing tree", num(*std::min_element(ratio.begin(), ratio.end())),
          ">= " + num(bound), violations == 0);

  // The convex DP on a realized arc picks a flat optimum: flat lengths are
  // integers and the realization moves every tree by far less than 1.
  auto flat_optimum = [&](const FlatConvexSet& f) {
    return flat_length(longest_plane_tree_convex(realize(f, kEps)), f);
  };
  const std::int64_t small_dp = flat_optimum(arc_Pn(8));
  const std::int64_t small_oracle = longest_plane_tree_bruteforce(arc_Pn(8)).best_length;
  out.add("arc_Pn(8) optimum, DP vs oracle", num(small_dp), num(small_oracle), small_dp == small_oracle);
  double prev = 2;
  bool decreasing = true;
  double last = 0;
  for (int n : {10, 50, 100}) {
    const FlatConvexSet f = arc_Pn(n);
    const std::int64_t opt = flat_optimum(f);
    const std::int64_t cr = longest_crossing_tree(f).best_length;
    last = static_cast<double>(opt) / static_cast<double>(cr);
    out.add("arc_Pn(" + num(n) + ") optimum / crossing tree", num(opt) + "/" + num(cr) + " = " + num(last),
            "in (2/3, 1]", last > 2.0 / 3.0 && last <= 1);
    decreasing = decreasing && last < prev;
    prev = last;
  }
  out.add("ratio decreasing over n = 10, 50, 100", decreasing ? "yes" : "no", "yes", decreasing);
  out.add("arc_Pn(100) ratio - 2/3", num(last - 2.0 / 3.0), "in (0, 0.01]",
          last - 2.0 / 3.0 > 0 && last - 2.0 / 3.0 <= 0.01);
}

void diam3_suite(Checks& out, int jobs) {
  constexpr int kCount = 200;
  std::vector<double> diff(kCount), bistar_diff(kCount);
  std::vector<int> pairs(kCount), bad_shape(kCount);
  parallel_for(kCount, jobs, [&](int i) {
    const int n = 4 + i % 6;
    const PointSet ps = random_general_position(n, 30000 + i);
    const SpanningTree t = longest_diameter3_tree(ps);
    bad_shape[i] = !is_plane(t, ps) || hop_diameter(t) > 3;
    diff[i] = std::fabs(tree_length(t, ps) - longest_plane_tree_diameter_at_most(ps, 3).best_length);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double got = tree_length(longest_plane_bistar(ps, a, b), ps);
        bistar_diff[i] = std::max(bistar_diff[i], std::fabs(got - bistar_by_assignment(ps, a, b).best_length));
        ++pairs[i];
      }
  });
  const auto mismatches = std::count_if(diff.begin(), diff.end(), [](double d) { return d > 1e-12; });
  const auto bistar_mismatches =
      std::count_if(bistar_diff.begin(), bistar_diff.end(), [](double d) { return d > 1e-12; });
  out.add("instances (n = 4..9)", num(kCount), "200", true);
  out.add("diameter-3 DP vs oracle mismatches", num(static_cast<int>(mismatches)), "0", mismatches == 0);
  out.add("largest diameter-3 difference", num(*std::max_element(diff.begin(), diff.end())), "<= 1e-12",
          mismatches == 0);
  out.add("DP trees not plane or diameter > 3",
          num(std::accumulate(bad_shape.begin(), bad_shape.end(), 0)), "0",
          std::accumulate(bad_shape.begin(), bad_shape.end(), 0) == 0);
  out.add("root pairs checked against assignment oracle", num(std::accumulate(pairs.begin(), pairs.end(), 0)),
          "all", true);
  out.add("bistar DP vs assignment oracle mismatches", num(static_cast<int>(bistar_mismatches)), "0",
          bistar_mismatches == 0);
}

void tristar_suite(Checks& out, int jobs) {
  constexpr int kCount = 100;
  std::vector<double> diff(kCount);
  std::vector<int> bad_shape(kCount);
  parallel_for(kCount, jobs, [&](int i) {
    const int n = 3 + i % 7;
    const PointSet ps = random_general_position(n, 50000 + i);
    auto hull = convex_hull(ps);
    std::shuffle(hull.begin(), hull.end(), std::mt19937_64(90000 + i));
    const int a = hull[0], b = hull[1], c = hull[2];
    const SpanningTree t = longest_plane_tristar(ps, a, b, c);
    bad_shape[i] = !is_plane(t, ps) || !std::all_of(t.edges().begin(), t.edges().end(), [&](const Edge& e) {
      return e.touches(a) || e.touches(b) || e.touches(c);
    });
    diff[i] = std::fabs(tree_length(t, ps) - tristar_by_assignment(ps, a, b, c).best_length);
  });
  const auto mismatches = std::count_if(diff.begin(), diff.end(), [](double d) { return d > 1e-12; });
  out.add("instances (n = 3..9, random hull triple)", num(kCount), "100", true);
  out.add("tristar DP vs assignment oracle mismatches", num(static_cast<int>(mismatches)), "0", mismatches == 0);
  out.add("largest difference", num(*std::max_element(diff.begin(), diff.end())), "<= 1e-12", mismatches == 0);
  out.add("DP trees not plane or not rooted at the triple",
          num(std::accumulate(bad_shape.begin(), bad_shape.end(), 0)), "0",
          std::accumulate(bad_shape.begin(), bad_shape.end(), 0) == 0);
}

void convex_suite(Checks& out, int jobs) {
  constexpr int kCount = 100;
  std::vector<int> optima(kCount), not_zigzag(kCount), dp_differs(kCount);
  parallel_for(kCount, jobs, [&](int i) {
    const int n = 4 + i % 6;
    const PointSet ps = random_convex_position(n, 60000 + i);
    const OracleResult best = longest_plane_tree_bruteforce(ps);
    const double target = tree_length(best.best_tree, ps);
    // every tree tied with the optimum up to rounding counts as optimal
    enumerate_plane_spanning_trees(ps, [&](const EdgeList& es) {
      SpanningTree t(n, es);
      if (tree_length(t, ps) < target * (1 - 1e-12)) return;
      ++optima[i];
      if (!dual_is_path(t, ps) || !is_caterpillar(t)) ++not_zigzag[i];
    });
    dp_differs[i] = tree_length(longest_plane_tree_convex(ps), ps) != target;
  });
  auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  out.add("instances (n = 4..9, convex position)", num(kCount), "100", true);
  out.add("optimal trees inspected", num(sum(optima)), ">= 100", sum(optima) >= kCount);
  out.add("optima whose dual is not a path", num(sum(not_zigzag)), "0", sum(not_zigzag) == 0);
  out.add("convex DP length differs from oracle", num(sum(dp_differs)), "0", sum(dp_differs) == 0);
}

void caterpillar_suite(Checks& out, int jobs) {
  std::vector<CaterpillarForm> forms;
  for (int n = 2; n <= 7; ++n)
    for (auto& f : all_caterpillar_forms(n)) forms.push_back(std::move(f));
  const int count = static_cast<int>(forms.size());
  std::vector<int> not_unique(count), not_iso(count);
  parallel_for(count, jobs, [&](int i) {
    const SpanningTree cat = caterpillar_from_spine(forms[i].spine_leaves);
    const auto optima = all_longest_plane_trees(caterpillar_to_flat_arc(cat));
    not_unique[i] = optima.size() != 1;
    not_iso[i] = optima.empty() || !caterpillars_isomorphic(optima[0], cat);
  });
  auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  out.add("caterpillar shapes with <= 6 edges", num(count), "23", count == 23);
  out.add("flat arcs without a unique optimum", num(sum(not_unique)), "0", sum(not_unique) == 0);
  out.add("optima not isomorphic to the caterpillar", num(sum(not_iso)), "0", sum(not_iso) == 0);
}

void bounds_suite(Checks& out, int jobs) {
  struct Row {
    std::string name;
    std::string measured, expected;
    bool pass;
  };
  std::vector<std::function<std::vector<Row>()>> tasks;
  for (int d : {3, 2})
    tasks.push_back([d] {
      const FlatConvexSet f = diameter_bound_arc(d);
      const std::int64_t opt = longest_plane_tree_bruteforce(f).best_length;
      const std::int64_t dd = longest_plane_tree_diameter_at_most(f, d).best_length;
      const std::int64_t want = diameter_bound_optimum(d);
      const std::string tag = "diameter_bound_arc(" + num(d) + ")";
      return std::vector<Row>{{tag + " optimum", num(opt), num(want), opt == want},
                              {tag + " best diameter <= " + num(d), num(dd), "<= " + num(want - 1), dd <= want - 1}};
    });
  for (int k : {1, 2})
    tasks.push_back([k] {
      const FlatConvexSet f = p4k2(k);
      const std::string tag = "p4k2(" + num(k) + ")";
      const std::int64_t opt = longest_plane_tree_bruteforce(f).best_length;
      const std::int64_t long_tree = p4k2_long_tree(k);
      bool exists = opt == long_tree;
      if (!exists)
        enumerate_plane_spanning_trees(f, [&](const EdgeList& es) {
          exists = exists || flat_length(SpanningTree(f.n(), es), f) == long_tree;
        });
      const std::int64_t d3 = longest_plane_tree_diameter_at_most(f, 3).best_length;
      std::int64_t best_star = 0;
      for (int r = 0; r < f.n(); ++r) best_star = std::max(best_star, flat_length(star_tree(f.n(), r), f));
      const std::int64_t cap3 = p4k2_diameter3_cap(k), cap_star = p4k2_star_cap(k);
      std::vector<Row> rows{
          {tag + " plane tree of length " + num(long_tree) + " exists (optimum " + num(opt) + ")",
           exists ? "yes" : "no", "yes", exists},
          {tag + " best diameter <= 3", num(d3), num(cap3), d3 == cap3},
          {tag + " best star", num(best_star), num(cap_star), best_star == cap_star}};
      return rows;
    });
  tasks.push_back([] {
    // zigzag trees containing the long edge have unimodal covers
    int checked = 0, failures = 0;
    for (int m = 1; m <= 7; ++m) {
      std::vector<std::int64_t> xs(m + 1);
      std::iota(xs.begin(), xs.end(), 0);
      const FlatConvexSet f = FlatConvexSet::arc(xs);
      std::vector<int> pos(m + 1);
      std::iota(pos.begin(), pos.end(), 0);
      enumerate_plane_spanning_trees(f, [&](const EdgeList& es) {
        SpanningTree t(m + 1, es);
        if (!t.contains(Edge(0, m)) || !dual_is_path_cyclic(t, pos)) return;
        ++checked;
        if (!is_caterpillar(t) || !is_unimodal_permutation(cover_sequence(t, f))) ++failures;
      });
    }
    return std::vector<Row>{{"zigzag trees with edge {0,m}, m <= 7", num(checked), "> 0", checked > 0},
                            {"of which covers are not a unimodal permutation", num(failures), "0", failures == 0}};
  });
  std::vector<std::vector<Row>> rows(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), jobs, [&](int i) { rows[i] = tasks[i](); });
  for (const auto& group : rows)
    for (const Row& r : group) out.add(r.name, r.measured, r.expected, r.pass);
}

void localsearch_suite(Checks& out, int) {
  const auto start = std::chrono::steady_clock::now();
  const PointSet ps = counterexample_9pt();
  const double opt = longest_plane_tree_bruteforce(ps, 9).best_length;
  const auto optima = local_optima_scan(ps, 9);
  int worse = 0, moved = 0;
  double smallest = opt;
  for (const auto& [t, len] : optima) {
    if (len >= opt - 1e-9) continue;
    ++worse;
    smallest = std::min(smallest, len);
    if (!alg_local(ps, t).second.empty() || improving_swap_exists(t, ps)) ++moved;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.add("global optimum", num(opt), "reference", true);
  out.add("local optima", num(static_cast<int>(optima.size())), ">= 1", !optima.empty());
  out.add("local optima shorter than optimum by > 1e-9", num(worse), ">= 1", worse >= 1);
  out.add("shortest local optimum", num(smallest), "< " + num(opt - 1e-9), smallest < opt - 1e-9);
  out.add("alg_local swaps from those optima", num(moved), "0", moved == 0);
  out.add("runtime seconds", num(secs), "< 300", secs < 300);
}

using SuiteFn = void (*)(Checks&, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"constants", constants_suite}, {"approx", approx_suite},           {"flat", flat_suite},
      {"diam3", diam3_suite},         {"tristar", tristar_suite},         {"convex", convex_suite},
      {"caterpillar", caterpillar_suite}, {"bounds", bounds_suite}, {"localsearch", localsearch_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult run_verify_suite(const std::string& name, int jobs) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) {
      const auto start = std::chrono::steady_clock::now();
      Checks checks;
      fn(checks, jobs);
      SuiteResult r{name, std::move(checks.list), 0.0};
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw PreconditionError("unknown verify suite '" + name + "'");
}

}  // namespace lpst
