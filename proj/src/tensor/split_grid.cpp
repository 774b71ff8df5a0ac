#include "reshard/tensor/split_grid.hpp"

#include <algorithm>

#include "reshard/error.hpp"

namespace reshard {

SplitGrid SplitGrid::even_split(const Shape& shape, size_t dim, uint64_t ways) {
  if (dim >= shape.size()) raise(Errc::RankMismatch, "split dim " + std::to_string(dim) + " out of rank");
  if (ways == 0 || shape[dim] % ways != 0)
    raise(Errc::IndivisibleSliceDim, "extent " + std::to_string(shape[dim]) + " not divisible by " +
                                         std::to_string(ways));
  std::vector<std::vector<uint64_t>> points(shape.size());
  uint64_t step = shape[dim] / ways;
  for (uint64_t k = 1; k < ways; ++k) points[dim].push_back(k * step);
  return SplitGrid(std::move(points));
}

void SplitGrid::check_against(const Shape& shape) const {
  if (points_.size() != shape.size())
    raise(Errc::RankMismatch, "grid rank " + std::to_string(points_.size()) + " vs tensor rank " +
                                  std::to_string(shape.size()));
  for (size_t d = 0; d < points_.size(); ++d) {
    uint64_t prev = 0;
    for (uint64_t p : points_[d]) {
      if (p == 0 || p >= shape[d] || p <= prev)
        raise(Errc::InvalidSplitPoint, "split point " + std::to_string(p) + " invalid for extent " +
                                           std::to_string(shape[d]) + " in dim " + std::to_string(d));
      prev = p;
    }
  }
}

bool SplitGrid::valid_for(const Shape& shape) const {
  try {
    check_against(shape);
    return true;
  } catch (const Error&) {
    return false;
  }
}

uint64_t SplitGrid::cell_count() const {
  uint64_t n = 1;
  for (const auto& pts : points_) n *= pts.size() + 1;
  return n;
}

std::vector<Interval> SplitGrid::dim_intervals(const Shape& shape, size_t dim) const {
  std::vector<Interval> out;
  out.reserve(points_[dim].size() + 1);
  uint64_t lo = 0;
  for (uint64_t p : points_[dim]) {
    out.push_back({lo, p});
    lo = p;
  }
  out.push_back({lo, shape[dim]});
  return out;
}

std::vector<Range> SplitGrid::cells(const Shape& shape) const {
  check_against(shape);
  std::vector<std::vector<Interval>> per_dim;
  per_dim.reserve(rank());
  for (size_t d = 0; d < rank(); ++d) per_dim.push_back(dim_intervals(shape, d));

  std::vector<Range> out;
  out.reserve(cell_count());
  std::vector<size_t> odo(rank(), 0);
  while (true) {
    std::vector<Interval> dims;
    dims.reserve(rank());
    for (size_t d = 0; d < rank(); ++d) dims.push_back(per_dim[d][odo[d]]);
    out.push_back(Range(std::move(dims)));
    // advance odometer, last dimension fastest
    size_t d = rank();
    while (d > 0) {
      --d;
      if (++odo[d] < per_dim[d].size()) break;
      odo[d] = 0;
      if (d == 0) return out;
    }
    if (rank() == 0) return out;  // rank-0: single cell
  }
}

Range SplitGrid::cell(const Shape& shape, uint64_t index) const {
  check_against(shape);
  std::vector<Interval> dims(rank());
  uint64_t rest = index;
  for (size_t d = rank(); d-- > 0;) {
    uint64_t n = points_[d].size() + 1;
    uint64_t i = rest % n;
    rest /= n;
    auto iv = dim_intervals(shape, d);
    dims[d] = iv[i];
  }
  if (rest != 0) raise(Errc::IndexOutOfRange, "cell index " + std::to_string(index) + " out of range");
  return Range(std::move(dims));
}

uint64_t SplitGrid::cell_index_of(const Shape& shape, const Range& r) const {
  check_against(shape);
  r.check_against(shape);
  uint64_t index = 0;
  for (size_t d = 0; d < rank(); ++d) {
    auto iv = dim_intervals(shape, d);
    // locate the interval containing [lo, hi)
    size_t i = 0;
    while (i < iv.size() && iv[i].hi <= r.dim(d).lo) ++i;
    if (i == iv.size() || r.dim(d).lo < iv[i].lo || r.dim(d).hi > iv[i].hi)
      raise(Errc::InvalidSplitPoint, "range " + r.to_string() + " crosses a grid boundary");
    index = index * iv.size() + i;
  }
  return index;
}

SplitGrid grid_refine(const SplitGrid& a, const SplitGrid& b) {
  if (a.rank() != b.rank()) raise(Errc::ShapeMismatch, "grids of different rank");
  std::vector<std::vector<uint64_t>> points(a.rank());
  for (size_t d = 0; d < a.rank(); ++d) {
    auto& out = points[d];
    out.insert(out.end(), a.points()[d].begin(), a.points()[d].end());
    out.insert(out.end(), b.points()[d].begin(), b.points()[d].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return SplitGrid(std::move(points));
}

}  // namespace reshard
