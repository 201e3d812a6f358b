#pragma once

#include "mstar/move_set.hpp"
#include "mstar/outcome.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Reference implementation of the misere outcome computation, kept as
// structurally different from the engine as possible: memoized top-down
// recursion (explicit stack) over the move options, with the memo laid out in
// colexicographic order instead of the engine's lexicographic layout. Slow on
// purpose; windows above 10^6 cells are rejected (std::invalid_argument).
OutcomeGrid oracle_outcomes(const MoveSet& moves, const Window& w);

inline constexpr std::size_t kOracleMaxCells = 1000000;

}  // namespace mstar
