#include "mstar/outcome.hpp"

#include <algorithm>
#include <barrier>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>

namespace mstar {

namespace {

// Grids at least this large (2D only) are worth fanning out over threads.
constexpr std::size_t kParallelThreshold = std::size_t(1) << 18;

struct FlatMoves {
  std::vector<Coord> coords;         // nmoves * d, lexicographically sorted
  std::vector<std::size_t> offsets;  // linear index deltas
  std::size_t size = 0;
};

FlatMoves flatten(const MoveSet& moves, const Window& w) {
  FlatMoves out;
  const int d = w.dim();
  for (const PositionVec& m : moves.to_vectors()) {
    for (int i = 0; i < d; ++i) out.coords.push_back(m[i]);
    out.offsets.push_back(w.index_of(m));
    ++out.size;
  }
  return out;
}

Outcome cell_outcome(const Coord* x, std::size_t idx, const FlatMoves& mv, int d,
                     const std::vector<Outcome>& cells) {
  bool has_option = false;
  for (std::size_t m = 0; m < mv.size; ++m) {
    const Coord* c = mv.coords.data() + m * static_cast<std::size_t>(d);
    if (c[0] > x[0]) break;  // moves sorted, nothing later can apply either
    bool applies = true;
    for (int i = 1; i < d; ++i)
      if (c[i] > x[i]) {
        applies = false;
        break;
      }
    if (!applies) continue;
    has_option = true;
    if (cells[idx - mv.offsets[m]] == Outcome::P) return Outcome::N;
  }
  return has_option ? Outcome::P : Outcome::TerminalN;
}

void dp_sequential(const Window& w, const FlatMoves& mv, std::vector<Outcome>& cells) {
  const int d = w.dim();
  std::vector<Coord> x(static_cast<std::size_t>(d), 0);
  std::size_t idx = 0;
  do {
    cells[idx] = cell_outcome(x.data(), idx, mv, d, cells);
    ++idx;
  } while (w.advance(x));
}

// 2D only: cells of equal coordinate sum form anti-diagonal levels whose
// outcomes depend only on strictly smaller sums, so each level is computed in
// parallel and a barrier separates consecutive levels.
void dp_parallel_2d(const Window& w, const FlatMoves& mv, std::vector<Outcome>& cells,
                    int threads) {
  const Coord bx = w.bound(0);
  const Coord by = w.bound(1);
  std::barrier<> level_done(threads);
  auto worker = [&](int t) {
    Coord xy[2];
    for (Coord s = 0, s_max = bx + by - 2; s <= s_max; ++s) {
      const Coord x_lo = std::max<Coord>(0, s - (by - 1));
      const Coord x_hi = std::min<Coord>(bx - 1, s);
      const Coord chunk = (x_hi - x_lo + threads) / threads;
      const Coord a = x_lo + static_cast<Coord>(t) * chunk;
      const Coord b = std::min<Coord>(x_hi + 1, a + chunk);
      for (Coord xx = a; xx < b; ++xx) {
        xy[0] = xx;
        xy[1] = s - xx;
        const std::size_t idx =
            static_cast<std::size_t>(xx) * w.stride(0) + static_cast<std::size_t>(xy[1]);
        cells[idx] = cell_outcome(xy, idx, mv, 2, cells);
      }
      level_done.arrive_and_wait();
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads - 1));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
}

OutcomeGrid compute_impl(const MoveSet& moves, const Window& w, int threads) {
  if (moves.window().dim() != w.dim())
    throw std::invalid_argument("compute_outcomes: dimension mismatch");
  const MoveSet inside = moves.restricted_to(w);
  if (inside.contains_zero()) {
    // Pass move: no play ever ends, every position has the N outcome.
    return OutcomeGrid(w, std::vector<Outcome>(w.size(), Outcome::N), true, moves.label());
  }
  std::vector<Outcome> cells(w.size(), Outcome::TerminalN);
  if (!inside.empty()) {
    const FlatMoves mv = flatten(inside, w);
    if (threads > 1 && w.dim() == 2)
      dp_parallel_2d(w, mv, cells, threads);
    else
      dp_sequential(w, mv, cells);
  }
  return OutcomeGrid(w, std::move(cells), false, moves.label());
}

}  // namespace

char outcome_char(Outcome o) {
  switch (o) {
    case Outcome::TerminalN: return 'T';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
  }
  return '?';
}

OutcomeGrid::OutcomeGrid(Window window, std::vector<Outcome> cells, bool has_pass_move,
                         std::string move_set_label)
    : window_(std::move(window)),
      cells_(std::move(cells)),
      has_pass_move_(has_pass_move),
      move_set_label_(std::move(move_set_label)) {
  if (cells_.size() != window_.size())
    throw std::invalid_argument("outcome grid size does not match window");
}

std::size_t OutcomeGrid::count(Outcome o) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), o));
}

MoveSet OutcomeGrid::positions_with(Outcome o) const {
  MoveSet::Bits bits(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == o) bits.set(i);
  return MoveSet(window_, std::move(bits),
                 std::string(1, outcome_char(o)) + "(" + move_set_label_ + ")");
}

int resolve_engine_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  long cap = 0;
  if (const char* env = std::getenv("SSL_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = v;
  }
  if (cap == 0) return static_cast<int>(hw);
  return static_cast<int>(std::min<long>(cap, hw));
}

OutcomeGrid compute_outcomes(const MoveSet& moves, const Window& w) {
  const bool big_2d = w.dim() == 2 && w.size() >= kParallelThreshold;
  return compute_impl(moves, w, big_2d ? resolve_engine_threads() : 1);
}

OutcomeGrid compute_outcomes(const MoveSet& moves, const Window& w, int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  return compute_impl(moves, w, threads);
}

MoveSet p_positions(const MoveSet& moves, const Window& w) {
  return compute_outcomes(moves, w).positions_with(Outcome::P);
}

}  // namespace mstar
