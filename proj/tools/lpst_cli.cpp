// lpst: generate instances, solve, verify, render, ratios.
// Exit codes: 0 ok, 1 input parse error, 2 precondition or bad arguments,
// 3 oracle cap exceeded, 4 a verify suite failed, 5 internal error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpst/approx.hpp"
#include "lpst/bistar.hpp"
#include "lpst/convexopt.hpp"
#include "lpst/errors.hpp"
#include "lpst/generators.hpp"
#include "lpst/io.hpp"
#include "lpst/localsearch.hpp"
#include "lpst/oracle.hpp"
#include "lpst/render.hpp"
#include "lpst/tristar.hpp"
#include "lpst/verify.hpp"

using namespace lpst;

namespace {

constexpr int kExitParse = 1, kExitPrecondition = 2, kExitCap = 3, kExitVerify = 4, kExitInternal = 5;

struct Options {
  std::string family, input, out, algo, tree_file, start_file, suite = "all";
  std::optional<int> n, k, d;
  std::uint64_t seed = 1;
  double eps = 1e-6;
  int jobs = 1, cap = kDefaultOracleCap;
  std::vector<int> roots;
  bool hull = false;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

int need(const std::optional<int>& v, const char* flag, const std::string& what) {
  if (!v) throw PreconditionError(what + " needs " + flag);
  return *v;
}

// Geometric view of an instance; flat sets are realized at eps.
struct Loaded {
  PointSet ps;
  std::optional<FlatConvexSet> flat;
};

Loaded load(const Options& o) {
  Instance inst = read_instance_file(o.input);
  if (auto* f = std::get_if<FlatConvexSet>(&inst)) {
    if (!(o.eps > 0)) throw PreconditionError("--eps must be positive");
    return {realize(*f, o.eps), *f};
  }
  return {std::get<PointSet>(std::move(inst)), std::nullopt};
}

int cmd_gen(const Options& o) {
  std::ostringstream out;
  const std::string& fam = o.family;
  if (fam == "arc")
    write_flat(out, arc_Pn(need(o.n, "--n", "gen arc")));
  else if (fam == "diambound")
    write_flat(out, diameter_bound_arc(need(o.d, "--d", "gen diambound")));
  else if (fam == "p4k2")
    write_flat(out, p4k2(need(o.k, "--k", "gen p4k2")));
  else if (fam == "random")
    write_points(out, random_general_position(need(o.n, "--n", "gen random"), o.seed));
  else if (fam == "convex")
    write_points(out, random_convex_position(need(o.n, "--n", "gen convex"), o.seed));
  else if (fam == "counterexample9")
    write_points(out, counterexample_9pt());
  else
    throw PreconditionError("unknown family '" + fam + "'");
  emit(o.out, out.str());
  return 0;
}

SpanningTree run_algo(const Options& o, const Loaded& in, std::string& note) {
  const PointSet& ps = in.ps;
  const std::string& a = o.algo;
  auto roots = [&](std::size_t count) {
    if (o.roots.size() != count)
      throw PreconditionError(a + " needs --roots with " + std::to_string(count) + " indices");
    return o.roots;
  };
  if (a == "oracle") {
    if (in.flat) {
      return o.d ? longest_plane_tree_diameter_at_most(*in.flat, *o.d, o.cap).best_tree
                 : longest_plane_tree_bruteforce(*in.flat, o.cap).best_tree;
    }
    return o.d ? longest_plane_tree_diameter_at_most(ps, *o.d, o.cap).best_tree
               : longest_plane_tree_bruteforce(ps, o.cap).best_tree;
  }
  if (a == "convex-dp") return longest_plane_tree_convex(ps);
  if (a == "bistar") {
    const auto r = roots(2);
    return longest_plane_bistar(ps, r[0], r[1]);
  }
  if (a == "diam3") return longest_diameter3_tree(ps);
  if (a == "tristar") {
    if (o.roots.empty()) return best_tristar_over_hull_triples(ps);
    const auto r = roots(3);
    return longest_plane_tristar(ps, r[0], r[1], r[2]);
  }
  if (a == "algsimple") return alg_simple(ps);
  if (a == "alglocal") {
    const SpanningTree start = o.start_file.empty() ? star(ps, 0) : read_tree_file(o.start_file, ps.n());
    auto [t, trace] = alg_local(ps, start);
    note = "swaps=" + std::to_string(trace.size());
    return t;
  }
  throw PreconditionError("unknown algorithm '" + a + "'");
}

int cmd_solve(const Options& o) {
  const Loaded in = load(o);
  std::string note;
  const SpanningTree t = run_algo(o, in, note);
  if (t.n() != in.ps.n() || !is_plane(t, in.ps)) {
    std::cerr << "internal error: " << o.algo << " produced a tree that is not a plane spanning tree\n";
    return kExitInternal;
  }
  std::ostringstream edges;
  write_tree(edges, t);
  emit(o.out, edges.str());
  std::cout << "length=" << format_double(tree_length(t, in.ps));
  if (in.flat) std::cout << " flat_length=" << flat_length(t, *in.flat);
  std::cout << " diameter=" << hop_diameter(t) << " plane=true algo=" << o.algo << '\n';
  if (!note.empty()) std::cout << note << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = verify_suite_names();
  else
    suites = {o.suite};
  bool ok = true;
  for (const auto& name : suites) {
    const SuiteResult r = run_verify_suite(name, o.jobs);
    for (const auto& c : r.checks)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << name << ": " << c.name << ": measured " << c.measured
                << ", expected " << c.expected << '\n';
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    std::cout << "suite " << name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << secs << " s)\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitVerify;
}

int cmd_render(const Options& o) {
  const Loaded in = load(o);
  std::optional<SpanningTree> tree;
  if (!o.tree_file.empty()) tree = read_tree_file(o.tree_file, in.ps.n());
  emit(o.out, render_svg(in.ps, tree ? &*tree : nullptr, {.hull = o.hull}));
  return 0;
}

// Best constrained tree over the best unconstrained tree, in flat units for
// flat inputs.
int cmd_ratio(const Options& o) {
  const Loaded in = load(o);
  std::vector<int> ds;
  if (o.d)
    ds = {*o.d};
  else
    ds = {2, 3, 4};
  auto show = [](const std::string& what, double constrained, double optimum) {
    std::cout << what << " constrained=" << format_double(constrained) << " optimum=" << format_double(optimum)
              << " ratio=" << format_double(constrained / optimum) << '\n';
  };
  if (in.flat) {
    const auto& f = *in.flat;
    const std::int64_t opt = longest_plane_tree_bruteforce(f, o.cap).best_length;
    for (int d : ds)
      show("diameter<=" + std::to_string(d), double(longest_plane_tree_diameter_at_most(f, d, o.cap).best_length),
           double(opt));
    if (!o.d) show("algsimple", double(flat_length(alg_simple(in.ps), f)), double(opt));
  } else {
    const double opt = longest_plane_tree_bruteforce(in.ps, o.cap).best_length;
    for (int d : ds)
      show("diameter<=" + std::to_string(d), longest_plane_tree_diameter_at_most(in.ps, d, o.cap).best_length, opt);
    if (!o.d) show("algsimple", tree_length(alg_simple(in.ps), in.ps), opt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest plane spanning trees: generators, solvers and checks"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write a generated point set or flat set");
  gen->add_option("family", o.family, "arc | diambound | p4k2 | random | convex | counterexample9")
      ->required()
      ->check(CLI::IsMember({"arc", "diambound", "p4k2", "random", "convex", "counterexample9"}));
  gen->add_option("--n", o.n, "number of points (random, convex) or arc length (arc)");
  gen->add_option("--d", o.d, "diameter parameter (diambound)");
  gen->add_option("--k", o.k, "family parameter (p4k2)");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "compute a tree and print a summary line");
  solve->add_option("input", o.input, "point file or flat set file")->required();
  solve->add_option("--algo", o.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"oracle", "convex-dp", "bistar", "diam3", "tristar", "algsimple", "alglocal"}));
  solve->add_option("--d", o.d, "diameter bound for the oracle");
  solve->add_option("--roots", o.roots, "root indices for bistar (2) or tristar (3)")->delimiter(',');
  solve->add_option("--start", o.start_file, "start tree for alglocal (default: star at point 0)");
  solve->add_option("--cap", o.cap, "oracle size cap (at most 16)");
  solve->add_option("--eps", o.eps, "realization height for flat inputs");
  solve->add_option("--out", o.out, "tree output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", o.suite, "suite name or 'all'")->check([](const std::string& s) {
    if (s == "all") return std::string();
    for (const auto& n : verify_suite_names())
      if (n == s) return std::string();
    return "unknown suite '" + s + "'";
  });
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "write an SVG drawing");
  render->add_option("input", o.input, "point file or flat set file")->required();
  render->add_option("--tree", o.tree_file, "tree file to draw");
  render->add_flag("--hull", o.hull, "draw the convex hull");
  render->add_option("--eps", o.eps, "realization height for flat inputs");
  render->add_option("--out", o.out, "SVG output file (default stdout)");

  auto* ratio = app.add_subcommand("ratio", "constrained over unconstrained optimum");
  ratio->add_option("input", o.input, "point file or flat set file")->required();
  ratio->add_option("--d", o.d, "single diameter bound (default 2, 3, 4 and algsimple)");
  ratio->add_option("--cap", o.cap, "oracle size cap (at most 16)");
  ratio->add_option("--eps", o.eps, "realization height for flat inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*solve) return cmd_solve(o);
    if (*verify) return cmd_verify(o);
    if (*render) return cmd_render(o);
    if (*ratio) return cmd_ratio(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
