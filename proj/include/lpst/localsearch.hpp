#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lpst/flatconvex.hpp"
#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

// Replace `remove` by `add`; gain = |add| - |remove| > 0.
template <class Length>
struct BasicSwap {
  Edge add;
  Edge remove;
  Length gain{};
};
using Swap = BasicSwap<double>;
using FlatSwap = BasicSwap<std::int64_t>;

template <class Length>
struct BasicSwapStep {
  Edge removed;
  Edge added;
  Length new_length{};
};
using SwapStep = BasicSwapStep<double>;
using SwapTrace = std::vector<SwapStep>;
using FlatSwapTrace = std::vector<BasicSwapStep<std::int64_t>>;

// Best improving single-edge exchange, ties broken by the smallest
// (added, removed) pair. Throws PreconditionError if t is not plane.
std::optional<Swap> improving_swap_exists(const SpanningTree& t, const PointSet& ps);
std::optional<FlatSwap> improving_swap_exists(const SpanningTree& t, const FlatConvexSet& f);

// Applies best improving swaps until none is left.
std::pair<SpanningTree, SwapTrace> alg_local(const PointSet& ps, const SpanningTree& t0);
std::pair<SpanningTree, FlatSwapTrace> alg_local(const FlatConvexSet& f, const SpanningTree& t0);

}  // namespace lpst
