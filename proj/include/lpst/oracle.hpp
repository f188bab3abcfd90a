#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lpst/flatconvex.hpp"
#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

inline constexpr int kDefaultOracleCap = 10;
// Hard limit of the bitmask representation used by the enumerator.
inline constexpr int kMaxOraclePoints = 16;

template <class Length>
struct BasicOracleResult {
  SpanningTree best_tree;
  Length best_length{};
  std::int64_t count_enumerated = 0;
};
using OracleResult = BasicOracleResult<double>;
using FlatOracleResult = BasicOracleResult<std::int64_t>;

// Receives each plane spanning tree as a canonical (sorted) edge list.
using TreeVisitor = std::function<void(const EdgeList&)>;

// Visits every plane spanning tree once, in lexicographic order of edge
// lists. Throws CapExceeded if n > cap. Caps above the default print a
// warning on stderr.
std::int64_t enumerate_plane_spanning_trees(const PointSet& ps, const TreeVisitor& visit,
                                            int cap = kDefaultOracleCap);
std::int64_t enumerate_plane_spanning_trees(const FlatConvexSet& f, const TreeVisitor& visit,
                                            int cap = kDefaultOracleCap);

// Longest plane tree; ties go to the lexicographically smallest edge list.
OracleResult longest_plane_tree_bruteforce(const PointSet& ps, int cap = kDefaultOracleCap);
FlatOracleResult longest_plane_tree_bruteforce(const FlatConvexSet& f, int cap = kDefaultOracleCap);

OracleResult longest_plane_tree_diameter_at_most(const PointSet& ps, int d,
                                                 int cap = kDefaultOracleCap);
FlatOracleResult longest_plane_tree_diameter_at_most(const FlatConvexSet& f, int d,
                                                     int cap = kDefaultOracleCap);

// All plane trees of maximum length (flat arithmetic).
std::vector<SpanningTree> all_longest_plane_trees(const FlatConvexSet& f,
                                                  int cap = kDefaultOracleCap);

// Maximum spanning tree of the complete graph, crossings allowed.
OracleResult longest_crossing_tree(const PointSet& ps);
FlatOracleResult longest_crossing_tree(const FlatConvexSet& f);

// Plane trees admitting no improving single swap.
std::vector<std::pair<SpanningTree, double>> local_optima_scan(const PointSet& ps,
                                                               int cap = kDefaultOracleCap);
std::vector<std::pair<SpanningTree, std::int64_t>> local_optima_scan(
    const FlatConvexSet& f, int cap = kDefaultOracleCap);

// Longest plane tree with edge ab in which every other point hangs on a or
// b: all 2^(n-2) assignments, filtered for planarity. count_enumerated
// counts the plane ones.
OracleResult bistar_by_assignment(const PointSet& ps, int a, int b, int cap = kDefaultOracleCap);

// Longest plane tree using two of the three root-root edges with every other
// point on one of a, b, c: 3 * 3^(n-3) candidates, filtered for planarity.
OracleResult tristar_by_assignment(const PointSet& ps, int a, int b, int c,
                                   int cap = kDefaultOracleCap);

}  // namespace lpst
