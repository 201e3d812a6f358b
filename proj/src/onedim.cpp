#include "mstar/onedim.hpp"

#include <stdexcept>
#include <string>

#include "mstar/set_ops.hpp"
#include "mstar/star.hpp"

namespace mstar {

namespace {

void check_1d(const Window& w, const char* who) {
  if (w.dim() != 1) throw std::invalid_argument(std::string(who) + ": window must be 1D");
}

}  // namespace

Coord mk_period(Coord k) {
  if (k < 1) throw std::invalid_argument("period is defined for k >= 1");
  return 3 * k - 1;
}

bool mk_contains(Coord k, Coord x) {
  if (k < 0 || x < 0) throw std::invalid_argument("mk_contains: arguments must be >= 0");
  if (k == 0) return false;
  const Coord r = x % mk_period(k);
  return r >= k && r <= 2 * k - 1;
}

MoveSet generate_mk(Coord k, const Window& w) {
  check_1d(w, "generate_mk");
  if (k < 0) throw std::invalid_argument("generate_mk: k must be >= 0");
  MoveSet::Bits bits(w.size());
  if (k > 0) {
    const Coord p = mk_period(k);
    for (Coord start = k; start < w.bound(0); start += p)
      for (Coord x = start; x < start + k && x < w.bound(0); ++x)
        bits.set(static_cast<std::size_t>(x));
  }
  return MoveSet(w, std::move(bits), "M_" + std::to_string(k));
}

MoveSet generate_ak(Coord k) {
  if (k < 1) throw std::invalid_argument("generate_ak: k must be >= 1");
  Window w({2 * k});
  return MoveSet::from_vectors(std::move(w), {PositionVec{k}, PositionVec{2 * k - 1}},
                               "A_" + std::to_string(k));
}

MoveSet lemma3_stage(Coord k, int stage, const Window& w) {
  check_1d(w, "lemma3_stage");
  if (k < 2) throw std::invalid_argument("lemma3_stage: k must be >= 2");
  if (stage < 1 || stage > 5) throw std::invalid_argument("lemma3_stage: stage must be in 1..5");
  const Coord bound = w.bound(0);
  MoveSet::Bits bits(w.size());
  auto set_if_inside = [&](Coord x) {
    if (x >= 0 && x < bound) bits.set(static_cast<std::size_t>(x));
  };
  auto set_block = [&](Coord lo, Coord hi) {
    for (Coord x = lo; x <= hi; ++x) set_if_inside(x);
  };
  switch (stage) {
    case 1:
      // residues k..2k-1 mod 2k
      for (Coord start = k; start < bound; start += 2 * k) set_block(start, start + k - 1);
      break;
    case 2:
      // {k,...,2k-1} then the step-2k ray 4k-1, 6k-1, ...
      set_block(k, 2 * k - 1);
      for (Coord x = 4 * k - 1; x < bound; x += 2 * k) set_if_inside(x);
      break;
    case 3:
      set_block(k, 2 * k - 1);
      set_block(4 * k - 1, 5 * k - 2);
      for (Coord x = 7 * k - 2; x < bound; x += 2 * k) set_if_inside(x);
      break;
    case 4:
      // the finite set M_k up to 10k-3, nothing beyond
      for (Coord x = 0; x < bound && x <= 10 * k - 3; ++x)
        if (mk_contains(k, x)) bits.set(static_cast<std::size_t>(x));
      break;
    case 5:
      return generate_mk(k, w).relabeled("{" + std::to_string(k) + "}^5");
  }
  return MoveSet(w, std::move(bits),
                 "{" + std::to_string(k) + "}^" + std::to_string(stage));
}

bool verify_min1d(const MoveSet& x, Coord k, const Window& w) {
  check_1d(w, "verify_min1d");
  if (k < 1) throw std::invalid_argument("verify_min1d: k must be >= 1");
  // The equivalence is witnessed by positions up to 4k-2; smaller windows can
  // truncate the witnesses away and make the two sides disagree spuriously.
  if (w.bound(0) < 4 * k - 1)
    throw std::invalid_argument("verify_min1d: window must reach 4k-1");
  const MoveSet inside = x.restricted_to(w);
  const MoveSet mk = generate_mk(k, w);
  const MoveSet ak = generate_ak(k).restricted_to(w);

  bool inclusions = (ak.bits() & ~inside.bits()).none() && (inside.bits() & ~mk.bits()).none();
  // The inclusion A_k <= X <= M_k characterizes P(X) = M_k; both sides are
  // recomputed independently and any disagreement means an engine bug.
  const MoveSet px = star(inside, w);
  const bool solves = px.same_members(mk);
  if (inclusions != solves)
    throw std::logic_error("verify_min1d: inclusion test and P(X) disagree for k=" +
                           std::to_string(k));
  return inclusions;
}

}  // namespace mstar
