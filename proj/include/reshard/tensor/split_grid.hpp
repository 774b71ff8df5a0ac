#pragma once

#include <cstdint>
#include <vector>

#include "reshard/tensor/range.hpp"

namespace reshard {

/// Axis-aligned grid partition of an index space: per dimension, a sorted
/// list of interior split points. The grid's cells tile the shape exactly.
/// An all-empty grid is the identity partition (one cell).
class SplitGrid {
 public:
  SplitGrid() = default;
  explicit SplitGrid(std::vector<std::vector<uint64_t>> points) : points_(std::move(points)) {}

  /// Identity grid (no split points) for a given rank.
  static SplitGrid identity(size_t rank) { return SplitGrid(std::vector<std::vector<uint64_t>>(rank)); }

  /// Even k-way split of `shape[dim]`; throws IndivisibleSliceDim when the
  /// extent is not divisible by `ways`.
  static SplitGrid even_split(const Shape& shape, size_t dim, uint64_t ways);

  size_t rank() const { return points_.size(); }
  const std::vector<std::vector<uint64_t>>& points() const { return points_; }

  /// Throws InvalidSplitPoint / RankMismatch when the grid does not address
  /// `shape` (points must be strictly increasing, strictly inside (0, extent)).
  void check_against(const Shape& shape) const;
  bool valid_for(const Shape& shape) const;

  uint64_t cell_count() const;

  /// All cells in lexicographic order (Cartesian product of the per-dimension
  /// intervals, last dimension fastest).
  std::vector<Range> cells(const Shape& shape) const;

  /// The cell addressed by its lexicographic index.
  Range cell(const Shape& shape, uint64_t index) const;

  /// Index of the cell containing `r`; throws InvalidSplitPoint when `r`
  /// crosses a grid boundary or lies outside the shape.
  uint64_t cell_index_of(const Shape& shape, const Range& r) const;

  bool operator==(const SplitGrid&) const = default;

 private:
  std::vector<Interval> dim_intervals(const Shape& shape, size_t dim) const;
};

/// Common refinement: per-dimension sorted union of split points. Every cell
/// of the result lies inside exactly one cell of each input. This is the
/// lattice join, so it is commutative, associative, and idempotent.
SplitGrid grid_refine(const SplitGrid& a, const SplitGrid& b);

}  // namespace reshard
