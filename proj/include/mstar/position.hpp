#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mstar {

using Coord = std::int64_t;

// A point of N_0^d. Used for both game positions and move vectors.
// Immutable after construction; coordinates are validated non-negative.
class PositionVec {
 public:
  PositionVec() = default;  // dim 0 placeholder, only valid as a container element
  explicit PositionVec(std::vector<Coord> coords);
  PositionVec(std::initializer_list<Coord> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  Coord operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
  const std::vector<Coord>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const PositionVec& a, const PositionVec& b) = default;

 private:
  std::vector<Coord> coords_;
};

// Componentwise partial order on N_0^d (dominance). Throws std::invalid_argument
// when dimensions differ.
bool partial_le(const PositionVec& x, const PositionVec& y);
bool partial_lt(const PositionVec& x, const PositionVec& y);

// Lexicographic order on equal-dimension vectors: a strict total order that
// extends partial_le, so scanning cells in this order sees every dominated
// position before the positions that dominate it.
bool lex_less(const PositionVec& a, const PositionVec& b);

// "4" in one dimension, "(4,0)" otherwise.
std::string to_string(const PositionVec& x);
std::string to_string(const std::vector<PositionVec>& xs);

}  // namespace mstar
