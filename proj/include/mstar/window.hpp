#pragma once

#include <cstddef>
#include <vector>

#include "mstar/position.hpp"

namespace mstar {

// The finite box W = [0,b0) x ... x [0,b_{d-1}). Every computation in this
// library is window-relative; cells are addressed by a row-major linear index
// with axis 0 most significant, so ascending index order is exactly
// lexicographic order on coordinates.
class Window {
 public:
  explicit Window(std::vector<Coord> bounds);

  int dim() const { return static_cast<int>(bounds_.size()); }
  Coord bound(int axis) const { return bounds_[static_cast<std::size_t>(axis)]; }
  const std::vector<Coord>& bounds() const { return bounds_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

  bool contains(const PositionVec& p) const;
  std::size_t index_of(const PositionVec& p) const;  // throws if outside
  PositionVec position_at(std::size_t index) const;

  // In-place odometer step through the cells in index (= lexicographic) order.
  // `coords` must have dim() entries; returns false after the last cell.
  bool advance(std::vector<Coord>& coords) const;

  friend bool operator==(const Window& a, const Window& b) { return a.bounds_ == b.bounds_; }

 private:
  std::vector<Coord> bounds_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

}  // namespace mstar
