#include "mstar/star.hpp"

#include <stdexcept>

#include "mstar/outcome.hpp"
#include "mstar/set_ops.hpp"

namespace mstar {

MoveSet star(const MoveSet& moves, const Window& w) {
  return p_positions(moves, w);
}

const MoveSet& IterationTrace::fixed_point() const {
  if (!converged()) throw std::logic_error("iteration did not converge within the cap");
  return stages.back();
}

std::vector<PositionVec> min_diff_set(const MoveSet& a, const MoveSet& b) {
  if (!(a.window() == b.window()))
    throw std::invalid_argument("min_diff_set: sets live on different windows");
  MoveSet diff(a.window(), a.bits() ^ b.bits());
  return min_elements(diff);
}

IterationTrace iterate_star(const MoveSet& moves, const Window& w, int cap) {
  if (cap < 1) throw std::invalid_argument("iteration cap must be >= 1");
  const std::string base = moves.label().empty() ? "M" : moves.label();
  IterationTrace trace{w, {}, {}, std::nullopt, cap};
  trace.stages.push_back(moves.restricted_to(w).relabeled(base + "^0"));
  for (int i = 0; i < cap; ++i) {
    MoveSet next = star(trace.stages.back(), w).relabeled(base + "^" + std::to_string(i + 1));
    trace.diff_sets.push_back(min_diff_set(trace.stages.back(), next));
    const bool fixed = trace.diff_sets.back().empty();
    trace.stages.push_back(std::move(next));
    if (fixed) {
      trace.phi_window = i;
      break;
    }
  }
  return trace;
}

std::optional<int> phi_window(const MoveSet& moves, const Window& w, int cap) {
  return iterate_star(moves, w, cap).phi_window;
}

std::optional<bool> compare_limits(const MoveSet& m, const MoveSet& g, const Window& w,
                                   int cap) {
  const IterationTrace tm = iterate_star(m, w, cap);
  if (!tm.converged()) return std::nullopt;
  const IterationTrace tg = iterate_star(g, w, cap);
  if (!tg.converged()) return std::nullopt;
  return tm.fixed_point().same_members(tg.fixed_point());
}

}  // namespace mstar
