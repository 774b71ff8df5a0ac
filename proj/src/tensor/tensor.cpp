#include "reshard/tensor/tensor.hpp"

#include <cstring>

#include "reshard/error.hpp"

namespace reshard {

Tensor::Tensor(Dtype dtype, Shape shape, std::vector<uint8_t> payload)
    : dtype_(dtype), shape_(std::move(shape)), payload_(std::move(payload)) {
  for (uint64_t e : shape_)
    if (e == 0) raise(Errc::InvalidTensor, "zero extent");
  uint64_t expected = shape_elements(shape_) * dtype_width(dtype_);
  if (payload_.size() != expected)
    raise(Errc::InvalidTensor, "payload " + std::to_string(payload_.size()) + " bytes, expected " +
                                   std::to_string(expected));
}

Tensor Tensor::zeros(Dtype dtype, Shape shape) {
  uint64_t bytes = shape_elements(shape) * dtype_width(dtype);
  return Tensor(dtype, std::move(shape), std::vector<uint8_t>(bytes, 0));
}

namespace {

// Row-major strides in elements.
std::vector<uint64_t> strides_of(const Shape& shape) {
  std::vector<uint64_t> strides(shape.size(), 1);
  for (size_t d = shape.size(); d-- > 1;) strides[d - 1] = strides[d] * shape[d];
  return strides;
}

// Walks all index tuples of the leading rank-1 dimensions of `extents`,
// invoking fn(linear_offset_in_elements) per contiguous innermost run.
template <typename Fn>
void for_each_row(const Shape& extents, const std::vector<uint64_t>& strides, const Range& at, Fn&& fn) {
  size_t rank = extents.size();
  if (rank == 0) {
    fn(0);
    return;
  }
  std::vector<uint64_t> idx(rank, 0);
  while (true) {
    uint64_t off = 0;
    for (size_t d = 0; d + 1 < rank; ++d) off += (at.dim(d).lo + idx[d]) * strides[d];
    off += at.dim(rank - 1).lo * strides[rank - 1];
    fn(off);
    size_t d = rank - 1;  // innermost handled as a whole row
    while (true) {
      if (d == 0) return;
      --d;
      if (++idx[d] < extents[d]) break;
      idx[d] = 0;
      if (d == 0) return;
    }
  }
}

}  // namespace

Tensor slice(const Tensor& t, const Range& r) {
  r.check_against(t.shape());
  Shape out_shape = r.extents();
  size_t width = t.width();
  auto strides = strides_of(t.shape());
  uint64_t row_elems = out_shape.empty() ? 1 : out_shape.back();
  uint64_t row_bytes = row_elems * width;

  std::vector<uint8_t> out;
  out.resize(shape_elements(out_shape) * width);
  uint64_t dst = 0;
  const uint8_t* src = t.payload().data();
  for_each_row(out_shape, strides, r, [&](uint64_t elem_off) {
    std::memcpy(out.data() + dst, src + elem_off * width, row_bytes);
    dst += row_bytes;
  });
  return Tensor(t.dtype(), std::move(out_shape), std::move(out));
}

Tensor merge(const std::vector<std::pair<Range, Tensor>>& parts, const Shape& target_shape) {
  if (parts.empty()) raise(Errc::TilingGap, "no parts");
  Dtype dtype = parts.front().second.dtype();
  uint64_t covered = 0;
  for (const auto& [range, part] : parts) {
    range.check_against(target_shape);
    if (part.dtype() != dtype) raise(Errc::DtypeMismatch, "parts disagree on dtype");
    if (part.shape() != range.extents())
      raise(Errc::ShapeMismatch, "part shape does not match its range " + range.to_string());
    covered += range.elements();
  }
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i].first.overlaps(parts[j].first))
        raise(Errc::TilingOverlap,
              parts[i].first.to_string() + " overlaps " + parts[j].first.to_string());
  if (covered != shape_elements(target_shape))
    raise(Errc::TilingGap, "parts cover " + std::to_string(covered) + " of " +
                               std::to_string(shape_elements(target_shape)) + " elements");

  size_t width = dtype_width(dtype);
  std::vector<uint8_t> out(shape_elements(target_shape) * width);
  auto strides = strides_of(target_shape);
  for (const auto& [range, part] : parts) {
    Shape extents = range.extents();
    uint64_t row_bytes = (extents.empty() ? 1 : extents.back()) * width;
    const uint8_t* src = part.payload().data();
    uint64_t src_off = 0;
    for_each_row(extents, strides, range, [&](uint64_t elem_off) {
      std::memcpy(out.data() + elem_off * width, src + src_off, row_bytes);
      src_off += row_bytes;
    });
  }
  return Tensor(dtype, target_shape, std::move(out));
}

}  // namespace reshard
