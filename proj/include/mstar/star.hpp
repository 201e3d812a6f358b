#pragma once

#include <optional>
#include <vector>

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/window.hpp"

namespace mstar {

inline constexpr int kDefaultIterationCap = 64;

// One application of the star operator: the next game's moves are the current
// game's P-positions, everything window-relative.
MoveSet star(const MoveSet& moves, const Window& w);

// Record of iterating star to a window fixed point. stages[0] is the input
// restricted to the window, stages[i+1] = star(stages[i]). Iteration stops as
// soon as two consecutive stages agree (phi_window = that first index) or when
// stages[cap] has been produced without convergence (phi_window empty).
struct IterationTrace {
  Window window;
  std::vector<MoveSet> stages;
  // diff_sets[i] = minimal antichain of the symmetric difference of stages i
  // and i+1; one entry per computed step, so stages.size() - 1 of them. The
  // last one is empty exactly when the trace converged.
  std::vector<std::vector<PositionVec>> diff_sets;
  std::optional<int> phi_window;
  int iteration_cap = kDefaultIterationCap;

  bool converged() const { return phi_window.has_value(); }
  const MoveSet& fixed_point() const;  // throws std::logic_error if not converged
};

IterationTrace iterate_star(const MoveSet& moves, const Window& w,
                            int cap = kDefaultIterationCap);

// Minimal antichain of the symmetric difference (the sets must share a window).
std::vector<PositionVec> min_diff_set(const MoveSet& a, const MoveSet& b);

// First index i with stages[i] == stages[i+1], or empty if the cap is hit.
std::optional<int> phi_window(const MoveSet& moves, const Window& w,
                              int cap = kDefaultIterationCap);

// Whether two games have the same window fixed point; empty if either
// iteration fails to converge within the cap.
std::optional<bool> compare_limits(const MoveSet& m, const MoveSet& g, const Window& w,
                                   int cap = kDefaultIterationCap);

}  // namespace mstar
