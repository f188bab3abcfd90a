#pragma once

#include <cstdint>
#include <vector>

#include "lpst/geom.hpp"
#include "lpst/spantree.hpp"

namespace lpst {

enum class Side { Top, Bottom };

// Convex point set in the flat limit: only integer x-coordinates matter.
// Points are listed in convex cyclic order. A single arc has strictly
// increasing xs, all on top. A twin set lists its top arc left to right,
// extremes included, then its bottom arc right to left, extremes excluded.
class FlatConvexSet {
 public:
  enum class Kind { Arc, Twin };

  FlatConvexSet() = default;
  static FlatConvexSet arc(std::vector<std::int64_t> xs);
  // top: increasing, including both extremes; bottom: decreasing, strictly
  // between the extremes.
  static FlatConvexSet twin(std::vector<std::int64_t> top, std::vector<std::int64_t> bottom);
  // Validates an explicit cyclic listing with per-point sides.
  static FlatConvexSet from_sides(Kind kind, std::vector<std::int64_t> xs, std::vector<Side> sides);

  Kind kind() const { return kind_; }
  int n() const { return static_cast<int>(xs_.size()); }
  const std::vector<std::int64_t>& xs() const { return xs_; }
  const std::vector<Side>& sides() const { return sides_; }
  std::int64_t width() const;
  std::int64_t flat_length(const Edge& e) const;

  bool operator==(const FlatConvexSet&) const = default;

 private:
  Kind kind_ = Kind::Arc;
  std::vector<std::int64_t> xs_;
  std::vector<Side> sides_;
};

std::vector<std::int64_t> gap_sequence(const FlatConvexSet& f);
std::vector<int> cover_sequence(const SpanningTree& t, const FlatConvexSet& f);
std::int64_t flat_length(const SpanningTree& t, const FlatConvexSet& f);
// Sum of cover times gap over an arc; equals flat_length on single arcs.
std::int64_t flat_length_from_covers(const SpanningTree& t, const FlatConvexSet& f);

// Strict interleaving of endpoints in the cyclic order.
bool chords_cross(const Edge& e1, const Edge& e2, const FlatConvexSet& f);
bool chords_cross_cyclic(const Edge& e1, const Edge& e2);

// Embeds the flat set at height scale eps; see README for the bump profile.
PointSet realize(const FlatConvexSet& f, double eps);

}  // namespace lpst
