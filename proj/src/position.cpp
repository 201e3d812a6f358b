#include "mstar/position.hpp"

#include <algorithm>
#include <stdexcept>

namespace mstar {

namespace {

void check_coords(const std::vector<Coord>& coords) {
  if (coords.empty()) throw std::invalid_argument("position needs at least one coordinate");
  for (Coord c : coords)
    if (c < 0) throw std::invalid_argument("position coordinates must be non-negative");
}

void check_same_dim(const PositionVec& x, const PositionVec& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
}

}  // namespace

PositionVec::PositionVec(std::vector<Coord> coords) : coords_(std::move(coords)) {
  check_coords(coords_);
}

PositionVec::PositionVec(std::initializer_list<Coord> coords) : coords_(coords) {
  check_coords(coords_);
}

bool PositionVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

bool partial_le(const PositionVec& x, const PositionVec& y) {
  check_same_dim(x, y);
  for (int i = 0; i < x.dim(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool partial_lt(const PositionVec& x, const PositionVec& y) {
  return partial_le(x, y) && x != y;
}

bool lex_less(const PositionVec& a, const PositionVec& b) {
  check_same_dim(a, b);
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end());
}

std::string to_string(const PositionVec& x) {
  if (x.dim() == 1) return std::to_string(x[0]);
  std::string out = "(";
  for (int i = 0; i < x.dim(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const std::vector<PositionVec>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
  out += '}';
  return out;
}

}  // namespace mstar
