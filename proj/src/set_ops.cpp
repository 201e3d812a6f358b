#include "mstar/set_ops.hpp"

namespace mstar {

std::vector<PositionVec> min_elements(const MoveSet& s) {
  // Members come out in lexicographic order, which extends dominance, so any
  // dominator of a member has already been seen; comparing against the kept
  // antichain alone is enough (a dominating member is itself dominated by
  // some kept minimal element).
  std::vector<PositionVec> mins;
  const auto& bits = s.bits();
  for (std::size_t i = bits.find_first(); i != MoveSet::Bits::npos; i = bits.find_next(i)) {
    PositionVec p = s.window().position_at(i);
    bool dominated = false;
    for (const PositionVec& m : mins)
      if (partial_le(m, p)) {
        dominated = true;
        break;
      }
    if (!dominated) mins.push_back(std::move(p));
  }
  return mins;
}

MoveSet terminal_set(const MoveSet& moves, const Window& w) {
  if (moves.window().dim() != w.dim())
    throw std::invalid_argument("terminal_set: dimension mismatch");
  const MoveSet inside = moves.restricted_to(w);
  // Upward closure of the moves by dynamic programming: x dominates a move
  // iff x is one, or some x - e_i does. Lexicographic cell order visits every
  // x - e_i before x.
  const int d = w.dim();
  MoveSet::Bits reach = inside.bits();
  std::vector<Coord> x(static_cast<std::size_t>(d), 0);
  std::size_t idx = 0;
  do {
    if (!reach.test(idx))
      for (int i = 0; i < d; ++i)
        if (x[static_cast<std::size_t>(i)] > 0 && reach.test(idx - w.stride(i))) {
          reach.set(idx);
          break;
        }
    ++idx;
  } while (w.advance(x));
  return MoveSet(w, ~reach, "T(" + moves.label() + ")");
}

MoveSet sum_set(const MoveSet& a, const MoveSet& b, const Window& w) {
  if (a.window().dim() != w.dim() || b.window().dim() != w.dim())
    throw std::invalid_argument("sum_set: dimension mismatch");
  const int d = w.dim();
  const std::vector<PositionVec> av = a.restricted_to(w).to_vectors();
  const std::vector<PositionVec> bv = b.restricted_to(w).to_vectors();
  MoveSet::Bits bits(w.size());
  for (const PositionVec& pa : av)
    for (const PositionVec& pb : bv) {
      bool in = true;
      std::size_t idx = 0;
      for (int i = 0; i < d; ++i) {
        const Coord c = pa[i] + pb[i];
        if (c >= w.bound(i)) {
          in = false;
          break;
        }
        idx += static_cast<std::size_t>(c) * w.stride(i);
      }
      if (in) bits.set(idx);
    }
  return MoveSet(w, std::move(bits), "(" + a.label() + "+" + b.label() + ")");
}

}  // namespace mstar
