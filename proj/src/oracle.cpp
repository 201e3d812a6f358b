#include "mstar/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mstar {

namespace {

constexpr signed char kUnknown = -1;

struct ColexOption {
  std::vector<Coord> coords;
  std::size_t delta;  // colex index decrease when applied
};

}  // namespace

OutcomeGrid oracle_outcomes(const MoveSet& moves, const Window& w) {
  if (moves.window().dim() != w.dim())
    throw std::invalid_argument("oracle_outcomes: dimension mismatch");
  if (w.size() > kOracleMaxCells)
    throw std::invalid_argument("oracle window larger than " + std::to_string(kOracleMaxCells) +
                                " cells");
  const int d = w.dim();
  const std::size_t n = w.size();
  const MoveSet inside = moves.restricted_to(w);

  if (inside.contains_zero())
    return OutcomeGrid(w, std::vector<Outcome>(n, Outcome::N), true, moves.label());

  // Colexicographic layout: axis 0 varies fastest, the reverse of the
  // engine's row-major lex layout.
  std::vector<std::size_t> cstride(static_cast<std::size_t>(d), 1);
  for (int i = 1; i < d; ++i)
    cstride[static_cast<std::size_t>(i)] =
        cstride[static_cast<std::size_t>(i - 1)] * static_cast<std::size_t>(w.bound(i - 1));

  std::vector<ColexOption> options;
  for (const PositionVec& m : inside.to_vectors()) {
    ColexOption o;
    o.coords = m.coords();
    o.delta = 0;
    for (int i = 0; i < d; ++i)
      o.delta += static_cast<std::size_t>(m[i]) * cstride[static_cast<std::size_t>(i)];
    options.push_back(std::move(o));
  }
  std::reverse(options.begin(), options.end());

  std::vector<signed char> memo(n, kUnknown);
  std::vector<Coord> coords(static_cast<std::size_t>(d));
  std::vector<std::size_t> stack;
  auto decode = [&](std::size_t idx) {
    for (int i = 0; i < d; ++i) {
      coords[static_cast<std::size_t>(i)] = static_cast<Coord>(
          (idx / cstride[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(w.bound(i)));
    }
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (memo[start] != kUnknown) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      if (memo[cur] != kUnknown) {
        stack.pop_back();
        continue;
      }
      decode(cur);
      bool has_option = false;
      bool found_p = false;
      bool blocked = false;
      for (const ColexOption& o : options) {
        bool applies = true;
        for (int i = 0; i < d; ++i)
          if (o.coords[static_cast<std::size_t>(i)] > coords[static_cast<std::size_t>(i)]) {
            applies = false;
            break;
          }
        if (!applies) continue;
        has_option = true;
        const std::size_t tgt = cur - o.delta;
        if (memo[tgt] == kUnknown) {
          stack.push_back(tgt);
          blocked = true;
          break;
        }
        if (memo[tgt] == static_cast<signed char>(Outcome::P)) {
          found_p = true;
          break;
        }
      }
      if (blocked) continue;
      memo[cur] = static_cast<signed char>(!has_option ? Outcome::TerminalN
                                           : found_p   ? Outcome::N
                                                       : Outcome::P);
      stack.pop_back();
    }
  }

  std::vector<Outcome> cells(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    decode(idx);
    std::size_t lex = 0;
    for (int i = 0; i < d; ++i)
      lex += static_cast<std::size_t>(coords[static_cast<std::size_t>(i)]) * w.stride(i);
    cells[lex] = static_cast<Outcome>(memo[idx]);
  }
  return OutcomeGrid(w, std::move(cells), false, moves.label());
}

}  // namespace mstar
