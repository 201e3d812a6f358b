#include "mstar/reflexivity.hpp"

#include "mstar/set_ops.hpp"
#include "mstar/star.hpp"

namespace mstar {

bool is_reflexive_window(const MoveSet& a, const Window& w) {
  const MoveSet inside = a.restricted_to(w);
  return star(inside, w).same_members(inside);
}

bool sumset_reflexive_check(const MoveSet& a, const Window& w) {
  const MoveSet inside = a.restricted_to(w);
  // Required identity on w: A + A = complement(A) minus terminals of A.
  // A pass move makes the left side contain 0 and the right side not, and an
  // empty A makes both sides empty, so the degenerate games need no special
  // casing here; they match the direct star check anyway.
  const MoveSet sums = sum_set(inside, inside, w);
  const MoveSet terminals = terminal_set(inside, w);
  const MoveSet::Bits rhs = ~inside.bits() & ~terminals.bits();
  return sums.bits() == rhs;
}

bool solvability_check(const MoveSet& x, const MoveSet& s, const Window& w) {
  return star(x, w).same_members(s.restricted_to(w));
}

}  // namespace mstar
