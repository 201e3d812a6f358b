#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mstar/oracle.hpp"
#include "mstar/outcome.hpp"
#include "mstar/set_ops.hpp"
#include "test_util.hpp"

using namespace mstar;

namespace {

bool grids_equal(const OutcomeGrid& a, const OutcomeGrid& b) {
  return a.window() == b.window() && a.cells() == b.cells() &&
         a.has_pass_move() == b.has_pass_move();
}

}  // namespace

TEST_CASE("engine on the {4,9} game") {
  Window w({26});
  MoveSet g = MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{9}}, "G");
  const OutcomeGrid grid = compute_outcomes(g, w);
  CHECK(grid.move_set_label() == "G");
  for (Coord x = 0; x <= 3; ++x) CHECK(grid.at(PositionVec{x}) == Outcome::TerminalN);
  CHECK(grid.at(PositionVec{12}) == Outcome::P);
  CHECK(grid.at(PositionVec{13}) == Outcome::N);
  CHECK(p_positions(g, w).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{12}, PositionVec{17}, PositionVec{18},
                                 PositionVec{19}, PositionVec{20}, PositionVec{25}});
}

TEST_CASE("engine degenerate games") {
  Window w({9});
  const OutcomeGrid empty = compute_outcomes(MoveSet(w), w);
  CHECK(empty.count(Outcome::TerminalN) == w.size());
  CHECK(p_positions(MoveSet(w), w).empty());

  MoveSet pass = MoveSet::from_vectors(w, {PositionVec{0}});
  const OutcomeGrid passed = compute_outcomes(pass, w);
  CHECK(passed.has_pass_move());
  CHECK(passed.count(Outcome::N) == w.size());
  CHECK(passed.count(Outcome::TerminalN) == 0);
}

TEST_CASE("engine dimension mismatch") {
  Window w({5, 5});
  MoveSet g = MoveSet::from_vectors(Window({5}), {PositionVec{1}});
  CHECK_THROWS_AS(compute_outcomes(g, w), std::invalid_argument);
}

TEST_CASE("terminal cells of a grid equal terminal_set") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    const Window w = testutil::random_window(rng, d, 3000);
    const MoveSet g = testutil::random_game(rng, w, 9, false);
    const OutcomeGrid grid = compute_outcomes(g, w);
    CHECK(grid.positions_with(Outcome::TerminalN).bits() == terminal_set(g, w).bits());
  }
}

TEST_CASE("no move connects two P cells, every plain N cell has a P option") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, 2000);
    const MoveSet g = testutil::random_game(rng, w, 10, false);
    const OutcomeGrid grid = compute_outcomes(g, w);
    const std::vector<PositionVec> moves = g.restricted_to(w).to_vectors();
    std::vector<Coord> coords(static_cast<std::size_t>(d), 0);
    std::size_t idx = 0;
    do {
      bool p_option = false;
      for (const PositionVec& m : moves) {
        bool applies = true;
        std::vector<Coord> tgt(coords);
        for (int i = 0; i < d; ++i) {
          tgt[static_cast<std::size_t>(i)] -= m[i];
          if (tgt[static_cast<std::size_t>(i)] < 0) applies = false;
        }
        if (!applies) continue;
        if (grid.at(PositionVec(tgt)) == Outcome::P) p_option = true;
      }
      if (grid.at(idx) == Outcome::P) CHECK_FALSE(p_option);
      if (grid.at(idx) == Outcome::N) CHECK(p_option);
      ++idx;
    } while (w.advance(coords));
  }
}

TEST_CASE("minimal moves are P and survive into the P set") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, 2500);
    const MoveSet g = testutil::random_game(rng, w, 12, false);
    if (g.empty()) continue;
    const MoveSet p = p_positions(g, w);
    for (const PositionVec& m : min_elements(g.restricted_to(w))) CHECK(p.contains(m));
    // the P set keeps exactly the same minimal antichain
    CHECK(min_elements(p) == min_elements(g.restricted_to(w)));
  }
}

TEST_CASE("window exactness: restriction before or after computing agrees") {
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, 1200);
    Window big = Window([&] {
      std::vector<Coord> b = w.bounds();
      for (Coord& v : b) v += 5;
      return b;
    }());
    const MoveSet g = testutil::random_game(rng, big, 10, false);
    const OutcomeGrid small_grid = compute_outcomes(g.restricted_to(w), w);
    const OutcomeGrid direct = compute_outcomes(g, w);
    CHECK(grids_equal(small_grid, direct));
  }
}

TEST_CASE("engine agrees with the oracle on random games") {
  std::mt19937 rng(1111);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    const Window w = testutil::random_window(rng, d, 20000);
    const MoveSet g = testutil::random_game(rng, w, 12, trial % 11 == 0);
    CHECK(grids_equal(compute_outcomes(g, w), oracle_outcomes(g, w)));
  }
}

TEST_CASE("forced thread counts give identical grids") {
  std::mt19937 rng(1212);
  for (int trial = 0; trial < 12; ++trial) {
    const Window w = testutil::random_window(rng, 2, 40000);
    const MoveSet g = testutil::random_game(rng, w, 14, false);
    const OutcomeGrid seq = compute_outcomes(g, w, 1);
    const OutcomeGrid par = compute_outcomes(g, w, 4);
    CHECK(grids_equal(seq, par));
  }
  CHECK_THROWS_AS(compute_outcomes(MoveSet(Window({4, 4})), Window({4, 4}), 0),
                  std::invalid_argument);
}
