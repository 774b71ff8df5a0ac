#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reshard {

using Shape = std::vector<uint64_t>;

uint64_t shape_elements(const Shape& shape);

/// Half-open interval [lo, hi) along one dimension.
struct Interval {
  uint64_t lo = 0;
  uint64_t hi = 0;

  uint64_t extent() const { return hi - lo; }
  auto operator<=>(const Interval&) const = default;
};

/// Axis-aligned sub-tensor address: one half-open interval per dimension.
/// Printed as `[lo:hi,lo:hi,...]`.
class Range {
 public:
  Range() = default;
  explicit Range(std::vector<Interval> dims) : dims_(std::move(dims)) {}

  /// The full range of a shape.
  static Range full(const Shape& shape);

  size_t rank() const { return dims_.size(); }
  const std::vector<Interval>& dims() const { return dims_; }
  const Interval& dim(size_t i) const { return dims_[i]; }

  Shape extents() const;
  uint64_t elements() const;

  /// Throws RankMismatch / RangeOutOfBounds when the range does not address
  /// `shape` (also rejects empty intervals).
  void check_against(const Shape& shape) const;
  bool valid_for(const Shape& shape) const;

  bool contains(const Range& other) const;
  bool overlaps(const Range& other) const;

  /// Offsets of this range relative to an enclosing one, so the result
  /// addresses the sub-tensor extracted for `outer`. Throws unless
  /// outer.contains(*this).
  Range rebase_into(const Range& outer) const;

  /// Inverse of rebase_into: map a range addressed inside `outer` back to
  /// absolute coordinates.
  Range offset_by(const Range& outer) const;

  std::string to_string() const;
  static Range parse(std::string_view text);  // throws MalformedFrame

  auto operator<=>(const Range&) const = default;

 private:
  std::vector<Interval> dims_;
};

/// A possibly-partial per-dimension selection as it appears on the wire and
/// in parallelization configs: `[:,2:4]` leaves dimension 0 unconstrained.
class RangeSpec {
 public:
  RangeSpec() = default;
  explicit RangeSpec(std::vector<std::optional<Interval>> dims) : dims_(std::move(dims)) {}

  static RangeSpec from_range(const Range& r);

  size_t rank() const { return dims_.size(); }
  const std::vector<std::optional<Interval>>& dims() const { return dims_; }

  /// Bind unconstrained dimensions to the full extent of `shape`.
  /// Throws RankMismatch / RangeOutOfBounds on an invalid selection.
  Range resolve(const Shape& shape) const;

  std::string to_string() const;
  static RangeSpec parse(std::string_view text);  // throws MalformedFrame

  bool operator==(const RangeSpec&) const = default;

 private:
  std::vector<std::optional<Interval>> dims_;
};

}  // namespace reshard
