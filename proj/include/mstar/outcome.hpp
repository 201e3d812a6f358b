#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/window.hpp"

namespace mstar {

// Misere play: a position with no move is a win for the player to move.
// TerminalN marks those cells apart from ordinary N so callers can recover
// the terminal set from a grid.
enum class Outcome : std::uint8_t { TerminalN = 0, N = 1, P = 2 };

char outcome_char(Outcome o);  // 'T', 'N', 'P'

class OutcomeGrid {
 public:
  OutcomeGrid(Window window, std::vector<Outcome> cells, bool has_pass_move,
              std::string move_set_label);

  const Window& window() const { return window_; }
  const std::vector<Outcome>& cells() const { return cells_; }
  Outcome at(std::size_t index) const { return cells_[index]; }
  Outcome at(const PositionVec& p) const { return cells_[window_.index_of(p)]; }
  bool has_pass_move() const { return has_pass_move_; }
  const std::string& move_set_label() const { return move_set_label_; }

  std::size_t count(Outcome o) const;
  MoveSet positions_with(Outcome o) const;

 private:
  Window window_;
  std::vector<Outcome> cells_;
  bool has_pass_move_;
  std::string move_set_label_;
};

// Full misere outcome grid over w. If 0 is a move the game never ends and
// every cell is N (and none is terminal); if the move set is empty inside w
// every cell is TerminalN. The engine runs a forward dynamic program; with
// more than one worker thread (2D only) cells are processed level by level
// of constant coordinate sum, which is safe because every move strictly
// decreases the sum. Thread count: the SSL_THREADS environment variable caps
// engine parallelism, 0 or unset means auto.
OutcomeGrid compute_outcomes(const MoveSet& moves, const Window& w);

// Same, with an explicit worker count (>= 1); bypasses SSL_THREADS and the
// grid-size heuristic. Exposed so determinism across thread counts is testable.
OutcomeGrid compute_outcomes(const MoveSet& moves, const Window& w, int threads);

// P cells of compute_outcomes as a set, labeled "P(<moves label>)".
MoveSet p_positions(const MoveSet& moves, const Window& w);

// SSL_THREADS resolution: value > 0 caps workers at that many, 0 / unset /
// unparsable means hardware concurrency.
int resolve_engine_threads();

}  // namespace mstar
