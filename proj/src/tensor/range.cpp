#include "reshard/tensor/range.hpp"

#include <charconv>
#include <sstream>

#include "reshard/error.hpp"

namespace reshard {

uint64_t shape_elements(const Shape& shape) {
  uint64_t n = 1;
  for (uint64_t e : shape) n *= e;
  return n;
}

Range Range::full(const Shape& shape) {
  std::vector<Interval> dims;
  dims.reserve(shape.size());
  for (uint64_t e : shape) dims.push_back({0, e});
  return Range(std::move(dims));
}

Shape Range::extents() const {
  Shape s;
  s.reserve(dims_.size());
  for (const auto& d : dims_) s.push_back(d.extent());
  return s;
}

uint64_t Range::elements() const {
  uint64_t n = 1;
  for (const auto& d : dims_) n *= d.extent();
  return n;
}

void Range::check_against(const Shape& shape) const {
  if (dims_.size() != shape.size())
    raise(Errc::RankMismatch, "range rank " + std::to_string(dims_.size()) + " vs tensor rank " +
                                  std::to_string(shape.size()));
  for (size_t i = 0; i < dims_.size(); ++i) {
    const auto& d = dims_[i];
    if (d.lo >= d.hi || d.hi > shape[i])
      raise(Errc::RangeOutOfBounds, "interval [" + std::to_string(d.lo) + ":" + std::to_string(d.hi) +
                                        ") invalid for extent " + std::to_string(shape[i]) +
                                        " in dim " + std::to_string(i));
  }
}

bool Range::valid_for(const Shape& shape) const {
  if (dims_.size() != shape.size()) return false;
  for (size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i].lo >= dims_[i].hi || dims_[i].hi > shape[i]) return false;
  return true;
}

bool Range::contains(const Range& other) const {
  if (other.rank() != rank()) return false;
  for (size_t i = 0; i < dims_.size(); ++i)
    if (other.dims_[i].lo < dims_[i].lo || other.dims_[i].hi > dims_[i].hi) return false;
  return true;
}

bool Range::overlaps(const Range& other) const {
  if (other.rank() != rank()) return false;
  for (size_t i = 0; i < dims_.size(); ++i)
    if (other.dims_[i].hi <= dims_[i].lo || dims_[i].hi <= other.dims_[i].lo) return false;
  return true;
}

Range Range::rebase_into(const Range& outer) const {
  if (!outer.contains(*this))
    raise(Errc::RangeOutOfBounds, "cannot rebase " + to_string() + " into " + outer.to_string());
  std::vector<Interval> dims;
  dims.reserve(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i)
    dims.push_back({dims_[i].lo - outer.dims_[i].lo, dims_[i].hi - outer.dims_[i].lo});
  return Range(std::move(dims));
}

Range Range::offset_by(const Range& outer) const {
  if (rank() != outer.rank()) raise(Errc::RankMismatch, "offset_by rank mismatch");
  std::vector<Interval> dims;
  dims.reserve(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i].hi + outer.dims_[i].lo > outer.dims_[i].hi)
      raise(Errc::RangeOutOfBounds, "range " + to_string() + " exceeds " + outer.to_string());
    dims.push_back({dims_[i].lo + outer.dims_[i].lo, dims_[i].hi + outer.dims_[i].lo});
  }
  return Range(std::move(dims));
}

std::string Range::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (i) out << ',';
    out << dims_[i].lo << ':' << dims_[i].hi;
  }
  out << ']';
  return out.str();
}

namespace {

uint64_t parse_u64(std::string_view text) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    raise(Errc::MalformedFrame, "bad integer '" + std::string(text) + "'");
  return v;
}

// Splits "a,b,c" between the brackets of "[a,b,c]"; "[]" yields no parts.
std::vector<std::string_view> bracket_parts(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    raise(Errc::MalformedFrame, "range must be bracketed: '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Range Range::parse(std::string_view text) {
  std::vector<Interval> dims;
  for (auto part : bracket_parts(text)) {
    size_t colon = part.find(':');
    if (colon == std::string_view::npos)
      raise(Errc::MalformedFrame, "interval needs ':' in '" + std::string(part) + "'");
    dims.push_back({parse_u64(part.substr(0, colon)), parse_u64(part.substr(colon + 1))});
  }
  return Range(std::move(dims));
}

RangeSpec RangeSpec::from_range(const Range& r) {
  std::vector<std::optional<Interval>> dims;
  dims.reserve(r.rank());
  for (const auto& d : r.dims()) dims.emplace_back(d);
  return RangeSpec(std::move(dims));
}

Range RangeSpec::resolve(const Shape& shape) const {
  if (dims_.size() != shape.size())
    raise(Errc::RankMismatch, "range spec rank " + std::to_string(dims_.size()) +
                                  " vs tensor rank " + std::to_string(shape.size()));
  std::vector<Interval> dims;
  dims.reserve(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i)
    dims.push_back(dims_[i] ? *dims_[i] : Interval{0, shape[i]});
  Range r{std::move(dims)};
  r.check_against(shape);
  return r;
}

std::string RangeSpec::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (i) out << ',';
    if (dims_[i])
      out << dims_[i]->lo << ':' << dims_[i]->hi;
    else
      out << ':';
  }
  out << ']';
  return out.str();
}

RangeSpec RangeSpec::parse(std::string_view text) {
  std::vector<std::optional<Interval>> dims;
  for (auto part : bracket_parts(text)) {
    if (part == ":") {
      dims.push_back(std::nullopt);
      continue;
    }
    size_t colon = part.find(':');
    if (colon == std::string_view::npos)
      raise(Errc::MalformedFrame, "interval needs ':' in '" + std::string(part) + "'");
    dims.push_back(Interval{parse_u64(part.substr(0, colon)), parse_u64(part.substr(colon + 1))});
  }
  return RangeSpec(std::move(dims));
}

}  // namespace reshard
