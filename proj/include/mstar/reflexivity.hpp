#pragma once

#include "mstar/move_set.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Direct check: star(A, w) has the same members as A restricted to w.
bool is_reflexive_window(const MoveSet& a, const Window& w);

// Sum-set criterion: A is reflexive iff A + A equals the complement of A with
// the terminals T(A) removed. Checked exactly on w; agrees with the direct
// check cell for cell because both sides at a position depend only on
// positions below it, all inside w.
bool sumset_reflexive_check(const MoveSet& a, const Window& w);

// Whether s is exactly the P-position set of the game x on w.
bool solvability_check(const MoveSet& x, const MoveSet& s, const Window& w);

}  // namespace mstar
