// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance [path-to-lpst-cli] [--jobs N]

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lpst/convexopt.hpp"
#include "lpst/flatconvex.hpp"
#include "lpst/generators.hpp"
#include "lpst/io.hpp"
#include "lpst/oracle.hpp"
#include "lpst/verify.hpp"

using namespace lpst;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string suite;  // empty for the infrastructure checks
};

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// Runs a shell command with stdout captured to a file; returns the exit code.
int run(const std::string& cmd, const fs::path& stdout_file) {
  const std::string full = cmd + " > " + quote(stdout_file.string()) + " 2>/dev/null";
  const int status = std::system(full.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

std::vector<CheckResult> infrastructure(const std::string& cli) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string measured = "", std::string expected = "") {
    if (measured.empty()) measured = pass ? "ok" : "failed";
    out.push_back({std::move(name), std::move(measured), expected.empty() ? "ok" : expected, pass});
  };

  // Round trips.
  {
    const PointSet ps = random_general_position(15, 99);
    std::ostringstream a;
    write_points(a, ps);
    std::istringstream in(a.str());
    const PointSet back = read_points(in);
    bool same = back.n() == ps.n();
    for (int i = 0; same && i < ps.n(); ++i) same = back[i].x == ps[i].x && back[i].y == ps[i].y;
    std::ostringstream b;
    write_points(b, back);
    add("point file round trip", same && a.str() == b.str());
  }
  {
    const SpanningTree t = longest_plane_tree_bruteforce(random_general_position(7, 5)).best_tree;
    std::ostringstream a;
    write_tree(a, t);
    std::istringstream in(a.str());
    add("tree file round trip", read_tree(in, 7) == t);
  }
  {
    bool ok = true;
    for (const FlatConvexSet& f : {arc_Pn(5), diameter_bound_arc(4), p4k2(2)}) {
      std::ostringstream a;
      write_flat(a, f);
      std::istringstream in(a.str());
      ok = ok && read_flat(in) == f;
    }
    add("flat set file round trip (arc and twin)", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 7; ++n)
      for (const auto& form : all_caterpillar_forms(n)) {
        std::ostringstream a;
        write_caterpillar(a, form.spine_leaves);
        std::istringstream in(a.str());
        ok = ok && read_caterpillar(in) == form.spine_leaves;
      }
    add("caterpillar file round trip", ok);
  }
  {
    std::ostringstream a, b;
    write_points(a, random_general_position(9, 7));
    write_points(b, random_general_position(9, 7));
    add("generator output identical across calls", a.str() == b.str());
  }

  if (cli.empty()) {
    add("command-line checks", false, "no CLI path given", "path to lpst");
    return out;
  }
  const fs::path dir = fs::temp_directory_path() / ("lpst_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  auto write = [&](const std::string& name, const std::string& text) { std::ofstream(file(name)) << text; };
  const std::string bin = quote(cli);

  const int g1 = run(bin + " gen random --n 9 --seed 7 --out " + quote(file("r1.txt")), file("log"));
  const int g2 = run(bin + " gen random --n 9 --seed 7 --out " + quote(file("r2.txt")), file("log"));
  add("cli gen random twice gives identical bytes",
      g1 == 0 && g2 == 0 && !read_file(file("r1.txt")).empty() &&
          read_file(file("r1.txt")) == read_file(file("r2.txt")));
  {
    const int c = run(bin + " gen counterexample9 --out " + quote(file("c9.txt")), file("log"));
    bool ok = c == 0;
    try {
      ok = ok && read_points_file(file("c9.txt")).n() == 9;
    } catch (const std::exception&) {
      ok = false;
    }
    add("cli gen counterexample9 passes general position", ok);
  }
  {
    run(bin + " gen diambound --d 3 --out " + quote(file("db.txt")), file("log"));
    std::string gaps;
    try {
      for (auto g : gap_sequence(read_flat_file(file("db.txt")))) gaps += (gaps.empty() ? "" : " ") + std::to_string(g);
    } catch (const std::exception&) {
      gaps = "unreadable";
    }
    add("cli gen diambound --d 3 gaps", gaps == "1 3 4 2", gaps, "1 3 4 2");
  }

  write("tri.txt", "# 3-4-5 triangle\n0 0\n4 0\n0 3\n");
  {
    const int c = run(bin + " solve " + quote(file("tri.txt")) + " --algo oracle --out " + quote(file("tri.tree")),
                      file("tri.sum"));
    const std::string sum = read_file(file("tri.sum"));
    add("exit 0: solve oracle on a triangle", c == 0 && sum == "length=9 diameter=2 plane=true algo=oracle\n",
        "exit " + std::to_string(c) + ", " + sum.substr(0, sum.find('\n')),
        "exit 0, length=9 diameter=2 plane=true algo=oracle");
    SpanningTree t;
    bool ok = true;
    try {
      t = read_tree_file(file("tri.tree"), 3);
    } catch (const std::exception&) {
      ok = false;
    }
    add("solve writes a readable tree file", ok && t == SpanningTree(3, {{0, 1}, {1, 2}}));
    const int r = run(bin + " render " + quote(file("tri.txt")) + " --tree " + quote(file("tri.tree")) +
                          " --out " + quote(file("a.svg")),
                      file("log"));
    run(bin + " render " + quote(file("tri.txt")) + " --tree " + quote(file("tri.tree")) + " --out " +
            quote(file("b.svg")),
        file("log"));
    const std::string svg = read_file(file("a.svg"));
    add("cli render: 3 circles, 2 lines, identical bytes",
        r == 0 && count(svg, "<circle") == 3 && count(svg, "<line") == 2 && svg == read_file(file("b.svg")));
  }
  {
    run(bin + " gen p4k2 --k 1 --out " + quote(file("p.txt")), file("log"));
    const int c = run(bin + " solve " + quote(file("p.txt")) + " --algo diam3 --out " + quote(file("p.tree")),
                      file("p.sum"));
    const std::string sum = read_file(file("p.sum"));
    add("solve diam3 on realized p4k2(1) reports flat length 17",
        c == 0 && sum.find(" flat_length=17 ") != std::string::npos, sum.substr(0, sum.find('\n')),
        "flat_length=17");
  }

  write("bad.txt", "0 0\n1 zero\n");
  add("exit 1: malformed point file",
      run(bin + " solve " + quote(file("bad.txt")) + " --algo diam3", file("log")) == 1);
  add("exit 1: missing input file",
      run(bin + " solve " + quote(file("missing.txt")) + " --algo diam3", file("log")) == 1);
  write("col.txt", "0.1 0.1\n0.2 0.2\n0.3 0.3\n");
  add("exit 2: collinear decimals",
      run(bin + " solve " + quote(file("col.txt")) + " --algo diam3", file("log")) == 2);
  add("exit 2: convex-dp on a non-convex set",
      run(bin + " solve " + quote(file("r1.txt")) + " --algo convex-dp", file("log")) == 2);
  add("exit 2: invalid generator parameter", run(bin + " gen p4k2 --k 0", file("log")) == 2);
  run(bin + " gen random --n 11 --seed 3 --out " + quote(file("r11.txt")), file("log"));
  add("exit 3: oracle above the cap",
      run(bin + " solve " + quote(file("r11.txt")) + " --algo oracle", file("log")) == 3);

  fs::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc)
      jobs = std::max(1, std::atoi(argv[++i]));
    else
      cli = arg;
  }
  const std::vector<Criterion> criteria{
      {1, "approximation constants", "constants"},
      {2, "alg_simple approximation guarantee", "approx"},
      {3, "flat 2/3 bound and ratio family", "flat"},
      {4, "diameter-3 and bistar DP against oracles", "diam3"},
      {5, "tristar DP against the assignment oracle", "tristar"},
      {6, "convex optima zigzag, convex DP exact", "convex"},
      {7, "caterpillar realization", "caterpillar"},
      {8, "bound constructions and unimodal covers", "bounds"},
      {9, "local search gets stuck", "localsearch"},
      {10, "file formats, determinism, exit codes", ""},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<CheckResult> checks;
    double seconds = 0;
    try {
      if (c.suite.empty()) {
        checks = infrastructure(cli);
      } else {
        const SuiteResult r = run_verify_suite(c.suite, jobs);
        checks = r.checks;
        seconds = r.seconds;
      }
    } catch (const std::exception& e) {
      checks.push_back({"exception", e.what(), "none", false});
    }
    bool pass = !checks.empty();
    for (const auto& k : checks) pass = pass && k.pass;
    for (const auto& k : checks)
      std::cout << "    " << (k.pass ? "ok   " : "FAIL ") << k.name << ": " << k.measured << " (expected "
                << k.expected << ")\n";
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", seconds);
    std::cout << "criterion " << c.number << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL");
    if (!c.suite.empty()) std::cout << " (" << secs << " s)";
    std::cout << '\n' << std::flush;
    if (!pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
