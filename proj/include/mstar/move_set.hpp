#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "mstar/position.hpp"
#include "mstar/window.hpp"

namespace mstar {

// An immutable finite subset of a window, bit-packed over the window's linear
// index space. Doubles as a move set and as a position set (P-positions,
// terminals, iteration stages); set algebra stays cheap either way.
class MoveSet {
 public:
  using Bits = boost::dynamic_bitset<>;

  explicit MoveSet(Window window, std::string label = "");
  MoveSet(Window window, Bits members, std::string label = "");

  // Members outside the window are dropped silently: every computation here is
  // window-relative and positions inside W never reach moves outside it.
  static MoveSet from_vectors(Window window, const std::vector<PositionVec>& members,
                              std::string label = "");

  const Window& window() const { return window_; }
  const Bits& bits() const { return members_; }
  const std::string& label() const { return label_; }

  bool empty() const { return members_.none(); }
  std::size_t count() const { return members_.count(); }
  bool test(std::size_t index) const { return members_.test(index); }
  bool contains(const PositionVec& p) const;  // false outside the window
  bool contains_zero() const;

  std::vector<PositionVec> to_vectors() const;  // lexicographic order

  MoveSet restricted_to(const Window& w) const;
  MoveSet relabeled(std::string label) const;

  // Membership equality; requires identical windows (throws otherwise),
  // comparing sets over different windows is almost always a bug.
  bool same_members(const MoveSet& other) const;

 private:
  Window window_;
  Bits members_;
  std::string label_;
};

}  // namespace mstar
