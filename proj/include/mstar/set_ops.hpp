#pragma once

#include <vector>

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Minimal elements of s under dominance, in lexicographic order. Always an
// antichain; empty input gives the empty antichain.
std::vector<PositionVec> min_elements(const MoveSet& s);

// T(M,W): positions of W from which no move applies, i.e. positions that
// dominate no element of moves. A lower ideal of W.
MoveSet terminal_set(const MoveSet& moves, const Window& w);

// (A + B) ∩ W, the pairwise vector sums that land inside w.
MoveSet sum_set(const MoveSet& a, const MoveSet& b, const Window& w);

}  // namespace mstar
