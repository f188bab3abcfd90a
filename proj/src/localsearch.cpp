#include "lpst/localsearch.hpp"

#include "lpst/detail/swap.hpp"

namespace lpst {

using detail::best_swap;
using detail::FlatModel;
using detail::GeomModel;
using detail::run_local;

std::optional<Swap> improving_swap_exists(const SpanningTree& t, const PointSet& ps) {
  return best_swap(t, GeomModel{ps});
}

std::optional<FlatSwap> improving_swap_exists(const SpanningTree& t, const FlatConvexSet& f) {
  return best_swap(t, FlatModel{f});
}

std::pair<SpanningTree, SwapTrace> alg_local(const PointSet& ps, const SpanningTree& t0) {
  return run_local(GeomModel{ps}, t0);
}

std::pair<SpanningTree, FlatSwapTrace> alg_local(const FlatConvexSet& f, const SpanningTree& t0) {
  return run_local(FlatModel{f}, t0);
}

}  // namespace lpst
