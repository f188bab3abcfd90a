#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lpst/approx.hpp"
#include "lpst/bistar.hpp"
#include "lpst/convexopt.hpp"
#include "lpst/errors.hpp"
#include "lpst/flatconvex.hpp"
#include "lpst/generators.hpp"
#include "lpst/io.hpp"
#include "lpst/localsearch.hpp"
#include "lpst/oracle.hpp"
#include "lpst/render.hpp"
#include "lpst/tristar.hpp"
#include "lpst/verify.hpp"

namespace py = pybind11;
using namespace lpst;

namespace {

// Python side: points are [(x, y)], trees are [(i, j)].
using Pts = std::vector<std::pair<double, double>>;
using Edges = std::vector<std::pair<int, int>>;

PointSet to_points(const Pts& pts) {
  std::vector<Point> v;
  v.reserve(pts.size());
  for (auto [x, y] : pts) v.push_back({x, y});
  return PointSet(std::move(v));
}

Pts from_points(const PointSet& ps) {
  Pts out;
  for (int i = 0; i < ps.n(); ++i) out.emplace_back(ps[i].x, ps[i].y);
  return out;
}

SpanningTree to_tree(int n, const Edges& es) {
  EdgeList list;
  for (auto [u, v] : es) list.emplace_back(u, v);
  return SpanningTree(n, std::move(list));
}

Edges from_tree(const SpanningTree& t) {
  Edges out;
  for (const Edge& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Longest plane spanning trees: exact solvers, approximations, generators";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.attr("DEFAULT_ORACLE_CAP") = kDefaultOracleCap;

  py::class_<FlatConvexSet>(m, "FlatConvexSet")
      .def_static("arc", &FlatConvexSet::arc, py::arg("xs"))
      .def_static("twin", &FlatConvexSet::twin, py::arg("top"), py::arg("bottom"))
      .def_property_readonly("kind", [](const FlatConvexSet& f) {
        return f.kind() == FlatConvexSet::Kind::Arc ? "arc" : "twin";
      })
      .def_property_readonly("xs", &FlatConvexSet::xs)
      .def_property_readonly("sides", [](const FlatConvexSet& f) {
        std::vector<std::string> s;
        for (Side side : f.sides()) s.push_back(side == Side::Top ? "top" : "bottom");
        return s;
      })
      .def_property_readonly("n", &FlatConvexSet::n)
      .def("gaps", [](const FlatConvexSet& f) { return gap_sequence(f); })
      .def("realize", [](const FlatConvexSet& f, double eps) { return from_points(realize(f, eps)); },
           py::arg("eps") = 1e-6)
      .def("flat_length", [](const FlatConvexSet& f, const Edges& es) { return flat_length(to_tree(f.n(), es), f); })
      .def("covers", [](const FlatConvexSet& f, const Edges& es) { return cover_sequence(to_tree(f.n(), es), f); })
      .def(py::self == py::self)
      .def("__repr__", [](const FlatConvexSet& f) {
        return "FlatConvexSet(" + std::to_string(f.n()) + " points, " +
               (f.kind() == FlatConvexSet::Kind::Arc ? "arc" : "twin") + ")";
      });

  // tree measures
  m.def("tree_length", [](const Pts& p, const Edges& es) { return tree_length(to_tree(static_cast<int>(p.size()), es), to_points(p)); },
        py::arg("points"), py::arg("edges"));
  m.def("is_plane", [](const Pts& p, const Edges& es) { return is_plane(to_tree(static_cast<int>(p.size()), es), to_points(p)); },
        py::arg("points"), py::arg("edges"));
  m.def("hop_diameter", [](int n, const Edges& es) { return hop_diameter(to_tree(n, es)); }, py::arg("n"),
        py::arg("edges"));
  m.def("convex_hull", [](const Pts& p) { return convex_hull(to_points(p)); }, py::arg("points"));
  m.def("dual_is_path", [](const Pts& p, const Edges& es) { return dual_is_path(to_tree(static_cast<int>(p.size()), es), to_points(p)); },
        py::arg("points"), py::arg("edges"));

  // exact solvers
  m.def(
      "longest_plane_tree_bruteforce",
      [](const Pts& p, int cap) {
        auto r = longest_plane_tree_bruteforce(to_points(p), cap);
        return py::make_tuple(from_tree(r.best_tree), r.best_length, r.count_enumerated);
      },
      py::arg("points"), py::arg("cap") = kDefaultOracleCap,
      "(edges, length, number of plane trees) for the longest plane spanning tree");
  m.def(
      "longest_plane_tree_diameter_at_most",
      [](const Pts& p, int d, int cap) {
        auto r = longest_plane_tree_diameter_at_most(to_points(p), d, cap);
        return py::make_tuple(from_tree(r.best_tree), r.best_length, r.count_enumerated);
      },
      py::arg("points"), py::arg("d"), py::arg("cap") = kDefaultOracleCap);
  m.def(
      "longest_plane_tree_flat",
      [](const FlatConvexSet& f, int cap) {
        auto r = longest_plane_tree_bruteforce(f, cap);
        return py::make_tuple(from_tree(r.best_tree), r.best_length, r.count_enumerated);
      },
      py::arg("flat"), py::arg("cap") = kDefaultOracleCap, "oracle in exact flat arithmetic");
  m.def("longest_plane_tree_convex", [](const Pts& p) { return from_tree(longest_plane_tree_convex(to_points(p))); },
        py::arg("points"));
  m.def("longest_plane_bistar",
        [](const Pts& p, int a, int b) { return from_tree(longest_plane_bistar(to_points(p), a, b)); },
        py::arg("points"), py::arg("a"), py::arg("b"));
  m.def("longest_diameter3_tree", [](const Pts& p) { return from_tree(longest_diameter3_tree(to_points(p))); },
        py::arg("points"));
  m.def("longest_plane_tristar",
        [](const Pts& p, int a, int b, int c) { return from_tree(longest_plane_tristar(to_points(p), a, b, c)); },
        py::arg("points"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("best_tristar_over_hull_triples",
        [](const Pts& p) { return from_tree(best_tristar_over_hull_triples(to_points(p))); }, py::arg("points"));

  // approximation and local search
  m.def("approx_constant_f", [] {
    auto c = approx_constant_f();
    return py::make_tuple(c.f, c.beta);
  });
  m.def("alg_simple", [](const Pts& p) { return from_tree(alg_simple(to_points(p))); }, py::arg("points"));
  m.def(
      "alg_local",
      [](const Pts& p, const Edges& start) {
        auto [t, trace] = alg_local(to_points(p), to_tree(static_cast<int>(p.size()), start));
        return py::make_tuple(from_tree(t), trace.size());
      },
      py::arg("points"), py::arg("start"), "(final edges, number of swaps)");

  m.def(
      "local_optima_scan",
      [](const Pts& p, int cap) {
        py::list out;
        for (const auto& [t, len] : local_optima_scan(to_points(p), cap)) out.append(py::make_tuple(from_tree(t), len));
        return out;
      },
      py::arg("points"), py::arg("cap") = kDefaultOracleCap, "[(edges, length)] of plane trees with no improving swap");

  // generators
  m.def("random_general_position", [](int n, std::uint64_t seed) { return from_points(random_general_position(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("random_convex_position", [](int n, std::uint64_t seed) { return from_points(random_convex_position(n, seed)); },
        py::arg("n"), py::arg("seed"));
  m.def("counterexample_9pt", [] { return from_points(counterexample_9pt()); });
  m.def("arc_Pn", &arc_Pn, py::arg("n"));
  m.def("diameter_bound_arc", &diameter_bound_arc, py::arg("d"));
  m.def("p4k2", &p4k2, py::arg("k"));

  // text formats and drawing
  m.def(
      "parse_points",
      [](const std::string& text) {
        std::istringstream in(text);
        return from_points(read_points(in));
      },
      py::arg("text"));
  m.def(
      "format_points",
      [](const Pts& p) {
        std::ostringstream out;
        write_points(out, to_points(p));
        return out.str();
      },
      py::arg("points"));
  m.def(
      "render_svg",
      [](const Pts& p, std::optional<Edges> es, bool hull) {
        const PointSet ps = to_points(p);
        std::optional<SpanningTree> t;
        if (es) t = to_tree(ps.n(), *es);
        return render_svg(ps, t ? &*t : nullptr, {.hull = hull});
      },
      py::arg("points"), py::arg("edges") = py::none(), py::arg("hull") = false);

  m.def("verify_suite_names", &verify_suite_names);
  m.def(
      "verify",
      [](const std::string& suite, int jobs) {
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_verify_suite(suite, jobs);
        }
        py::list checks;
        for (const auto& c : r.checks) {
          py::dict d;
          d["name"] = c.name;
          d["measured"] = c.measured;
          d["expected"] = c.expected;
          d["pass"] = c.pass;
          checks.append(d);
        }
        return py::make_tuple(r.passed(), checks);
      },
      py::arg("suite"), py::arg("jobs") = 1, "(passed, [check dicts]) for a named suite");
}
