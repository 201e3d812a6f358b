#pragma once

#include <optional>
#include <string>

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/star.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Classification of 2D games by the minimal antichain of the move set:
// tier = number of minimal elements (3 means "three or more"), sub = letter
// keyed to how many of them lie on a coordinate axis.
//   tier 1: (a) the minimal element is on an axis, (b) it is not.
//   tiers 2, 3: (a) no minimal element on an axis, (b) exactly one, (c) one
//   on each axis.
struct ClassLabel {
  int tier = 0;
  char sub = '?';

  std::string str() const;
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) = default;
};

// Throws std::invalid_argument unless m is 2D, nonempty and without the zero
// vector (a pass move has no meaningful minimal structure).
ClassLabel classify_min_moves(const MoveSet& m);

enum class PeriodVerdict { Periodic, Inconclusive };

struct LinePeriodReport {
  PositionVec base;
  PositionVec direction;    // canonicalized: divided by the gcd of its entries
  int preperiod = 0;        // meaningful only when verdict == Periodic
  int period = 0;
  int confirmed_length = 0;  // membership samples extracted before leaving the window
  PeriodVerdict verdict = PeriodVerdict::Inconclusive;
};

// Extracts membership of s along base + t*direction for t = 0,1,... while
// inside the window, then looks for the smallest eventual period with minimal
// preperiod. Periodic requires at least three full repetitions of the period
// inside the sampled ray; fewer than 8 samples is an error
// (std::invalid_argument), not an Inconclusive verdict.
LinePeriodReport line_period(const MoveSet& s, const PositionVec& base,
                             const PositionVec& direction);

// Iterates a class-3(a) game (three or more minimal moves, none on an axis)
// and returns phi_window, or empty if the cap is hit. Precondition checked via
// classify_min_moves; throws std::invalid_argument for any other class.
std::optional<int> survey_class3a(const MoveSet& m, const Window& w,
                                  int cap = kDefaultIterationCap);

}  // namespace mstar
