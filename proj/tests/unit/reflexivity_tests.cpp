#include <random>

#include "doctest.h"
#include "mstar/onedim.hpp"
#include "mstar/reflexivity.hpp"
#include "mstar/set_ops.hpp"
#include "mstar/star.hpp"
#include "test_util.hpp"

using namespace mstar;

TEST_CASE("direct reflexivity examples") {
  Window w({200});
  CHECK(is_reflexive_window(generate_mk(4, w), w));
  CHECK_FALSE(is_reflexive_window(MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{9}}), w));
  CHECK(is_reflexive_window(MoveSet(w), w));
  CHECK_FALSE(is_reflexive_window(MoveSet::from_vectors(w, {PositionVec{0}, PositionVec{3}}), w));
}

TEST_CASE("sum-set criterion examples") {
  Window w({200});
  CHECK(sumset_reflexive_check(generate_mk(4, w), w));
  MoveSet g = MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{9}});
  CHECK_FALSE(sumset_reflexive_check(g, w));
  // witness: 5 is neither a member nor terminal nor a pair sum of {4,9}
  CHECK_FALSE(sum_set(g, g, w).contains(PositionVec{5}));
  CHECK_FALSE(terminal_set(g, w).contains(PositionVec{5}));
  CHECK_FALSE(sumset_reflexive_check(MoveSet::from_vectors(w, {PositionVec{0}, PositionVec{3}}), w));
  CHECK(sumset_reflexive_check(MoveSet(w), w));
}

TEST_CASE("solvability examples") {
  Window w({500});
  const MoveSet m4 = generate_mk(4, w);
  CHECK(solvability_check(MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{7}}), m4, w));
  CHECK(solvability_check(m4, m4, w));
  CHECK_FALSE(solvability_check(MoveSet::from_vectors(w, {PositionVec{4}}), m4, w));
}

TEST_CASE("the two reflexivity criteria agree") {
  std::mt19937 rng(1717);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, d == 1 ? 400 : 700);
    const MoveSet g = trial % 3 == 0 ? testutil::random_dense(rng, w, 0.3)
                                     : testutil::random_game(rng, w, 10, trial % 5 == 0);
    CHECK(is_reflexive_window(g, w) == sumset_reflexive_check(g, w));
  }
  // and on the M_k family over their natural windows
  for (Coord k = 0; k <= 12; ++k) {
    Window w({40 * k + 40});
    CHECK(is_reflexive_window(generate_mk(k, w), w));
    CHECK(sumset_reflexive_check(generate_mk(k, w), w));
  }
}

TEST_CASE("window fixed points pass the sum-set check") {
  std::mt19937 rng(1818);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, d == 1 ? 400 : 900);
    const MoveSet g = testutil::random_game(rng, w, 8, false);
    const IterationTrace trace = iterate_star(g, w);
    if (!trace.converged()) continue;
    CHECK(sumset_reflexive_check(trace.fixed_point(), w));
  }
}

TEST_CASE("equal minimal antichains give equal fixed points") {
  std::mt19937 rng(1919);
  int tested = 0;
  for (int trial = 0; trial < 80 && tested < 20; ++trial) {
    const int d = 1 + trial % 2;
    const Window w = testutil::random_window(rng, d, d == 1 ? 300 : 700);
    const MoveSet a = testutil::random_game(rng, w, 7, false);
    if (a.empty()) continue;
    const auto mins = min_elements(a);
    // second game: same minimal antichain, independent extra members above it
    MoveSet::Bits bits(w.size());
    for (const PositionVec& m : mins) bits.set(w.index_of(m));
    std::uniform_int_distribution<std::size_t> cell(0, w.size() - 1);
    for (int t = 0; t < 6; ++t) {
      const std::size_t idx = cell(rng);
      const PositionVec p = w.position_at(idx);
      for (const PositionVec& m : mins)
        if (partial_lt(m, p)) {
          bits.set(idx);
          break;
        }
    }
    const MoveSet b(w, std::move(bits), "B");
    REQUIRE(min_elements(b) == mins);
    const auto same = compare_limits(a, b, w);
    if (!same.has_value()) continue;
    CHECK(*same);
    ++tested;
  }
  CHECK(tested >= 10);
}
