#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mstar/onedim.hpp"
#include "mstar/reflexivity.hpp"
#include "mstar/set_ops.hpp"
#include "mstar/star.hpp"
#include "test_util.hpp"

using namespace mstar;

TEST_CASE("M_k generation examples") {
  CHECK(generate_mk(4, Window({30})).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{15}, PositionVec{16}, PositionVec{17},
                                 PositionVec{18}, PositionVec{26}, PositionVec{27},
                                 PositionVec{28}, PositionVec{29}});
  CHECK(generate_mk(1, Window({10})).to_vectors() ==
        std::vector<PositionVec>{PositionVec{1}, PositionVec{3}, PositionVec{5}, PositionVec{7},
                                 PositionVec{9}});
  CHECK(generate_mk(0, Window({50})).empty());
  CHECK_THROWS_AS(generate_mk(-1, Window({50})), std::invalid_argument);
  CHECK_THROWS_AS(generate_mk(2, Window({5, 5})), std::invalid_argument);
}

TEST_CASE("M_k residues match Eq-style block structure") {
  for (Coord k = 1; k <= 50; ++k) {
    const Coord p = mk_period(k);
    CHECK(p == 3 * k - 1);
    Window w({p * 8});
    const MoveSet mk = generate_mk(k, w);
    std::set<Coord> residues, co_residues;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (mk.test(i))
        residues.insert(static_cast<Coord>(i) % p);
      else
        co_residues.insert(static_cast<Coord>(i) % p);
    }
    std::set<Coord> expect, co_expect;
    for (Coord r = k; r <= 2 * k - 1; ++r) expect.insert(r);
    for (Coord r = 0; r < p; ++r)
      if (!expect.count(r)) co_expect.insert(r);
    CHECK(residues == expect);
    CHECK(co_residues == co_expect);
  }
}

TEST_CASE("A_k generation") {
  CHECK(generate_ak(4).to_vectors() == std::vector<PositionVec>{PositionVec{4}, PositionVec{7}});
  CHECK(generate_ak(1).to_vectors() == std::vector<PositionVec>{PositionVec{1}});
  CHECK(generate_ak(10).to_vectors() ==
        std::vector<PositionVec>{PositionVec{10}, PositionVec{19}});
  CHECK_THROWS_AS(generate_ak(0), std::invalid_argument);
}

TEST_CASE("stage closed forms for k=4") {
  Window w({40});
  CHECK(lemma3_stage(4, 1, w).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{12}, PositionVec{13}, PositionVec{14},
                                 PositionVec{15}, PositionVec{20}, PositionVec{21},
                                 PositionVec{22}, PositionVec{23}, PositionVec{28},
                                 PositionVec{29}, PositionVec{30}, PositionVec{31},
                                 PositionVec{36}, PositionVec{37}, PositionVec{38},
                                 PositionVec{39}});
  CHECK(lemma3_stage(4, 2, w).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{15}, PositionVec{23}, PositionVec{31},
                                 PositionVec{39}});
  CHECK(lemma3_stage(4, 3, w).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{15}, PositionVec{16}, PositionVec{17},
                                 PositionVec{18}, PositionVec{26}, PositionVec{34}});
  // stage 4 is the finite prefix of M_4 up to 10k-3 = 37, nothing beyond
  CHECK(lemma3_stage(4, 4, Window({60})).to_vectors() ==
        std::vector<PositionVec>{PositionVec{4}, PositionVec{5}, PositionVec{6}, PositionVec{7},
                                 PositionVec{15}, PositionVec{16}, PositionVec{17},
                                 PositionVec{18}, PositionVec{26}, PositionVec{27},
                                 PositionVec{28}, PositionVec{29}, PositionVec{37}});
  CHECK(lemma3_stage(4, 5, w).same_members(generate_mk(4, w).relabeled("")));
  CHECK_THROWS_AS(lemma3_stage(1, 1, w), std::invalid_argument);
  CHECK_THROWS_AS(lemma3_stage(4, 0, w), std::invalid_argument);
  CHECK_THROWS_AS(lemma3_stage(4, 6, w), std::invalid_argument);
}

TEST_CASE("stage closed forms match the iteration") {
  for (Coord k = 2; k <= 10; ++k) {
    Window w({30 * k});
    const IterationTrace trace =
        iterate_star(MoveSet::from_vectors(w, {PositionVec{k}}), w);
    REQUIRE(trace.converged());
    REQUIRE(trace.stages.size() >= 6);
    for (int stage = 1; stage <= 5; ++stage)
      CHECK(trace.stages[static_cast<std::size_t>(stage)].same_members(
          lemma3_stage(k, stage, w)));
  }
}

TEST_CASE("verify_min1d examples") {
  Window w({500});
  CHECK(verify_min1d(MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{7}}), 4, w));
  CHECK(verify_min1d(
      MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{7}, PositionVec{15}}), 4, w));
  CHECK_FALSE(verify_min1d(
      MoveSet::from_vectors(w, {PositionVec{4}, PositionVec{7}, PositionVec{9}}), 4, w));
  CHECK(verify_min1d(generate_mk(4, w), 4, w));
  CHECK_FALSE(verify_min1d(MoveSet::from_vectors(w, {PositionVec{4}}), 4, w));
  CHECK_THROWS_AS(verify_min1d(generate_mk(4, w), 4, Window({10})), std::invalid_argument);
}

TEST_CASE("random members of the solvable family") {
  std::mt19937 rng(2020);
  Window w({400});
  for (int trial = 0; trial < 60; ++trial) {
    const Coord k = 2 + trial % 7;
    const MoveSet mk = generate_mk(k, w);
    const MoveSet ak = generate_ak(k).restricted_to(w);
    // random X with A_k subset X subset M_k
    MoveSet::Bits bits = ak.bits();
    std::bernoulli_distribution keep(0.4);
    for (std::size_t i = mk.bits().find_first(); i != MoveSet::Bits::npos;
         i = mk.bits().find_next(i))
      if (keep(rng)) bits.set(i);
    const MoveSet x(w, std::move(bits), "X");
    CHECK(verify_min1d(x, k, w));
    CHECK(solvability_check(x, mk, w));
  }
}

TEST_CASE("limits of random 1D games are M_k") {
  std::mt19937 rng(2121);
  for (int trial = 0; trial < 40; ++trial) {
    const Coord k = 1 + trial % 12;
    Window w({40 * k + 40});
    // random game with min k
    MoveSet::Bits bits(w.size());
    bits.set(static_cast<std::size_t>(k));
    std::uniform_int_distribution<std::size_t> cell(static_cast<std::size_t>(k),
                                                    w.size() - 1);
    for (int t = 0; t < 8; ++t) bits.set(cell(rng));
    const MoveSet g(w, std::move(bits), "G");
    const IterationTrace trace = iterate_star(g, w);
    REQUIRE(trace.converged());
    CHECK(trace.fixed_point().same_members(generate_mk(k, w)));
  }
}

TEST_CASE("random non-M_k sets are not reflexive") {
  std::mt19937 rng(2222);
  int checked = 0;
  for (int trial = 0; trial < 100 && checked < 40; ++trial) {
    Window w({150});
    const MoveSet g = testutil::random_dense(rng, w, 0.25);
    if (g.contains_zero()) continue;
    if (g.empty()) continue;
    const Coord k = g.to_vectors().front()[0];
    if (g.same_members(generate_mk(k, w))) continue;
    CHECK_FALSE(is_reflexive_window(g, w));
    ++checked;
  }
  CHECK(checked >= 40);
}
