#pragma once

#include <string>

#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

struct RenderOptions {
  bool hull = false;  // draw the convex hull outline
};

// Standalone SVG on an 800x600 canvas with a 5% margin. Points are disks of
// radius 3, tree edges are lines. Uniform scale, y pointing up. Same input
// gives the same bytes.
std::string render_svg(const PointSet& ps, const SpanningTree* tree = nullptr,
                       RenderOptions opts = {});

}  // namespace lpst
