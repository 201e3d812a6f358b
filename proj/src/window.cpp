#include "mstar/window.hpp"

#include <limits>
#include <stdexcept>

namespace mstar {

Window::Window(std::vector<Coord> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw std::invalid_argument("window needs at least one axis");
  for (Coord b : bounds_)
    if (b < 1) throw std::invalid_argument("window bounds must be >= 1");
  strides_.assign(bounds_.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    strides_[i] = total;
    const auto b = static_cast<std::size_t>(bounds_[i]);
    if (total > std::numeric_limits<std::size_t>::max() / b)
      throw std::overflow_error("window too large to index");
    total *= b;
  }
  size_ = total;
}

bool Window::contains(const PositionVec& p) const {
  if (p.dim() != dim())
    throw std::invalid_argument("dimension mismatch between position and window");
  for (int i = 0; i < dim(); ++i)
    if (p[i] < 0 || p[i] >= bounds_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::size_t Window::index_of(const PositionVec& p) const {
  if (!contains(p)) throw std::out_of_range("position outside window: " + to_string(p));
  std::size_t idx = 0;
  for (int i = 0; i < dim(); ++i)
    idx += static_cast<std::size_t>(p[i]) * strides_[static_cast<std::size_t>(i)];
  return idx;
}

PositionVec Window::position_at(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("cell index outside window");
  std::vector<Coord> coords(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    coords[i] = static_cast<Coord>(index / strides_[i]);
    index %= strides_[i];
  }
  return PositionVec(std::move(coords));
}

bool Window::advance(std::vector<Coord>& coords) const {
  if (coords.size() != bounds_.size())
    throw std::invalid_argument("coordinate buffer has wrong dimension");
  for (std::size_t i = bounds_.size(); i-- > 0;) {
    if (++coords[i] < bounds_[i]) return true;
    coords[i] = 0;
  }
  return false;
}

}  // namespace mstar
