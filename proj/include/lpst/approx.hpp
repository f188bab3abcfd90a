#pragma once

#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

struct ApproxConstants {
  double f = 0.0;     // guaranteed approximation factor
  double beta = 0.0;  // averaging weight paired with f
};

// -80 + 128x + 504x^2 - 768x^3 - 845x^4 + 1096x^5 + 256x^6
double approx_polynomial(double x);

// (2x-1)/(2 sqrt(5-8x) - 1) - (1 - x sqrt(4x^2-1) - 2x^2)
double algebra_residual(double x);

// Root of the polynomial in [0.54, 0.55] by bisection, plus beta.
ApproxConstants approx_constant_f();

struct AlgebraRootReport {
  double residual_five_eighths = 0.0;
  double residual_f = 0.0;
  double fifth_root = 0.0;
  double sixth_root = 0.0;
  double residual_fifth = 0.0;
  double residual_sixth = 0.0;
  bool ok = false;
};
AlgebraRootReport check_algebra_roots();

SpanningTree star(const PointSet& ps, int a);

// Tree that splits the points by nearest root and hangs each point near a
// on the far-side neighbour bounding its angular wedge around a.
SpanningTree wedge_tree(const PointSet& ps, int a, int b);

// Longest of all stars and wedge trees.
SpanningTree alg_simple(const PointSet& ps);

}  // namespace lpst
