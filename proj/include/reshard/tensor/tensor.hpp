#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "reshard/tensor/dtype.hpp"
#include "reshard/tensor/range.hpp"

namespace reshard {

/// Dense n-dimensional array: row-major, little-endian, contiguous payload.
/// Values are immutable after construction; all operations return new
/// tensors. Zero extents are rejected.
class Tensor {
 public:
  Tensor(Dtype dtype, Shape shape, std::vector<uint8_t> payload);

  /// All-zero payload of the right size.
  static Tensor zeros(Dtype dtype, Shape shape);

  Dtype dtype() const { return dtype_; }
  const Shape& shape() const { return shape_; }
  size_t rank() const { return shape_.size(); }
  uint64_t elements() const { return shape_elements(shape_); }
  size_t width() const { return dtype_width(dtype_); }

  const std::vector<uint8_t>& payload() const { return payload_; }
  std::span<const uint8_t> bytes() const { return payload_; }

  bool operator==(const Tensor& other) const = default;

 private:
  Dtype dtype_;
  Shape shape_;
  std::vector<uint8_t> payload_;
};

/// Copy out the sub-tensor addressed by `r`. The element at output index v
/// equals the input element at v + r.lo.
Tensor slice(const Tensor& t, const Range& r);

/// Reassemble a tensor of `target_shape` from parts whose ranges tile it
/// exactly. Left inverse of slice: slice(merge(parts), r_i) == part_i.
/// Throws TilingGap / TilingOverlap / DtypeMismatch / ShapeMismatch.
Tensor merge(const std::vector<std::pair<Range, Tensor>>& parts, const Shape& target_shape);

}  // namespace reshard
