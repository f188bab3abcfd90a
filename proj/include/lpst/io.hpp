#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "lpst/flatconvex.hpp"
#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

// Text formats. '#' starts a comment line; blank lines are skipped.
//   points:      "x y" per line, decimal literals; index = line order
//   tree:        "i j" per line
//   flat set:    header "arc" or "twin", then "x [top|bottom]" per line
//   caterpillar: "spine k1 k2 ... ks"
// Readers throw ParseError on malformed text and PreconditionError on
// well-formed text describing an invalid object (collinear points, a
// non-tree edge list, a flat set out of convex order).

// General position is checked on the exact decimal values before rounding.
PointSet read_points(std::istream& in);
void write_points(std::ostream& out, const PointSet& ps);

// n < 0 takes n = (number of edges) + 1.
SpanningTree read_tree(std::istream& in, int n = -1);
void write_tree(std::ostream& out, const SpanningTree& t);

FlatConvexSet read_flat(std::istream& in);
void write_flat(std::ostream& out, const FlatConvexSet& f);

std::vector<int> read_caterpillar(std::istream& in);
void write_caterpillar(std::ostream& out, const std::vector<int>& spine_leaves);

// A point file or a flat-set file, told apart by the first token.
using Instance = std::variant<PointSet, FlatConvexSet>;
Instance read_instance(std::istream& in);

// File wrappers; an unreadable file is a ParseError.
PointSet read_points_file(const std::string& path);
SpanningTree read_tree_file(const std::string& path, int n = -1);
FlatConvexSet read_flat_file(const std::string& path);
Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest text that reads back to the same double.
std::string format_double(double v);

}  // namespace lpst
