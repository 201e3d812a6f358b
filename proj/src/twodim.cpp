#include "mstar/twodim.hpp"

#include <numeric>
#include <stdexcept>

#include "mstar/set_ops.hpp"

namespace mstar {

std::string ClassLabel::str() const {
  return std::to_string(tier) + "(" + std::string(1, sub) + ")";
}

ClassLabel classify_min_moves(const MoveSet& m) {
  if (m.window().dim() != 2)
    throw std::invalid_argument("classify_min_moves: game must be 2D");
  if (m.empty()) throw std::invalid_argument("classify_min_moves: empty move set");
  if (m.contains_zero())
    throw std::invalid_argument("classify_min_moves: pass move has no classification");
  const std::vector<PositionVec> mins = min_elements(m);
  // An antichain holds at most one point per axis, so the axis count is 0, 1
  // or 2 and "2" means one on each axis.
  int on_axis = 0;
  for (const PositionVec& p : mins)
    if (p[0] == 0 || p[1] == 0) ++on_axis;
  ClassLabel label;
  label.tier = mins.size() == 1 ? 1 : mins.size() == 2 ? 2 : 3;
  if (label.tier == 1)
    label.sub = on_axis ? 'a' : 'b';
  else
    label.sub = on_axis == 0 ? 'a' : on_axis == 1 ? 'b' : 'c';
  return label;
}

LinePeriodReport line_period(const MoveSet& s, const PositionVec& base,
                             const PositionVec& direction) {
  const Window& w = s.window();
  if (base.dim() != w.dim() || direction.dim() != w.dim())
    throw std::invalid_argument("line_period: dimension mismatch");
  if (direction.is_zero()) throw std::invalid_argument("line_period: zero direction");
  if (!w.contains(base)) throw std::invalid_argument("line_period: base outside window");

  Coord g = 0;
  for (Coord c : direction.coords()) g = std::gcd(g, c);
  std::vector<Coord> dir = direction.coords();
  for (Coord& c : dir) c /= g;

  std::vector<char> seq;
  std::vector<Coord> at = base.coords();
  while (true) {
    PositionVec p(at);
    if (!w.contains(p)) break;
    seq.push_back(s.contains(p) ? 1 : 0);
    for (int i = 0; i < w.dim(); ++i) at[static_cast<std::size_t>(i)] += dir[static_cast<std::size_t>(i)];
  }
  const int n = static_cast<int>(seq.size());
  if (n < 8)
    throw std::invalid_argument("line_period: only " + std::to_string(n) +
                                " samples inside the window, need at least 8");

  LinePeriodReport report;
  report.base = base;
  report.direction = PositionVec(std::move(dir));
  report.confirmed_length = n;
  // Least (preperiod, period) pair, compared lexicographically with the
  // preperiod first, that describes the whole sequence with at least three
  // full confirmed repetitions. Minimizing the period first instead would
  // let any run of four-plus equal samples at the end of the window pass as
  // period 1 (M_4 on [0,200) ends in five non-members), which is exactly the
  // truncation artifact the verdict is meant to exclude.
  int best_pre = -1;
  int best_q = 0;
  for (int q = 1; 3 * q <= n; ++q) {
    int pre = 0;
    for (int i = n - q - 1; i >= 0; --i)
      if (seq[static_cast<std::size_t>(i)] != seq[static_cast<std::size_t>(i + q)]) {
        pre = i + 1;
        break;
      }
    if (pre + 3 * q > n) continue;
    if (best_pre < 0 || pre < best_pre) {
      best_pre = pre;
      best_q = q;
    }
  }
  if (best_pre >= 0) {
    report.preperiod = best_pre;
    report.period = best_q;
    report.verdict = PeriodVerdict::Periodic;
  } else {
    report.verdict = PeriodVerdict::Inconclusive;
  }
  return report;
}

std::optional<int> survey_class3a(const MoveSet& m, const Window& w, int cap) {
  const ClassLabel label = classify_min_moves(m);
  if (!(label == ClassLabel{3, 'a'}))
    throw std::invalid_argument("survey_class3a: game is class " + label.str() +
                                ", expected 3(a)");
  return phi_window(m, w, cap);
}

}  // namespace mstar
