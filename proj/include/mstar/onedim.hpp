#pragma once

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Block period of the k-th limit family, p_k = 3k - 1.
Coord mk_period(Coord k);

// Membership in M_k without materializing the set: k blocks of k starting at
// multiples of p_k offset by k, i.e. x mod p_k in [k, 2k-1]. M_0 is empty.
bool mk_contains(Coord k, Coord x);

// M_k ∩ w (1D window). k >= 0.
MoveSet generate_mk(Coord k, const Window& w);

// A_k = {k, 2k-1}, the minimal game with limit M_k ({1} when k = 1). k >= 1.
// Carried on the tight window [0, 2k).
MoveSet generate_ak(Coord k);

// Closed form for stage i of iterating the singleton game {k}, k >= 2,
// i in 1..5, restricted to w. Stage 5 equals M_k; stage 4 is the finite set
// M_k ∩ [0, 10k-3].
MoveSet lemma3_stage(Coord k, int stage, const Window& w);

// Minimum-driven reflexivity test for 1D games with min(X) = {k}: X is
// window-reflexive iff X = M_k on w. Cross-validates the equivalence with the
// direct star check and throws std::logic_error if the two ever disagree.
bool verify_min1d(const MoveSet& x, Coord k, const Window& w);

}  // namespace mstar
