// mstar: misere-play vector subtraction games, star iteration, and the
// structure of their window fixed points. See README.md for the formats.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mstar/io.hpp"
#include "mstar/onedim.hpp"
#include "mstar/oracle.hpp"
#include "mstar/outcome.hpp"
#include "mstar/reflexivity.hpp"
#include "mstar/render.hpp"
#include "mstar/set_ops.hpp"
#include "mstar/star.hpp"
#include "mstar/twodim.hpp"

namespace {

using namespace mstar;

// exit 2: a capped iteration ran out of stages before two consecutive ones agreed
struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string moves_text;
  std::string file_path;
  std::string window_text;
  std::string out_path;
  int cap = kDefaultIterationCap;
};

ParsedMoves load_moves(const CommonArgs& a) {
  if (!a.moves_text.empty() && !a.file_path.empty())
    throw std::runtime_error("give either --moves or --file, not both");
  if (!a.moves_text.empty()) return parse_inline_moves(a.moves_text);
  if (!a.file_path.empty()) return parse_move_set_file(a.file_path);
  throw std::runtime_error("a move set is required (--moves or --file)");
}

Window resolve_window(const CommonArgs& a, int dim) {
  if (!a.window_text.empty()) {
    const std::vector<Coord> bounds = parse_coord_list(a.window_text);
    if (static_cast<int>(bounds.size()) != dim)
      throw std::runtime_error("--window has " + std::to_string(bounds.size()) +
                               " bounds but the move set is " + std::to_string(dim) +
                               "-dimensional");
    return Window(bounds);
  }
  if (dim == 1) return Window({500});
  if (dim == 2) return Window({120, 120});
  throw std::runtime_error("--window is required for dimension " + std::to_string(dim));
}

MoveSet game_on_window(const CommonArgs& a) {
  const ParsedMoves parsed = load_moves(a);
  return MoveSet::from_vectors(resolve_window(a, parsed.dim), parsed.vectors);
}

std::string format_vectors(const std::vector<PositionVec>& vs) {
  std::string out;
  for (const PositionVec& p : vs) {
    if (!out.empty()) out += ' ';
    out += to_string(p);
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
  if (!out) throw std::runtime_error("short write to " + path);
}

IterationTrace timed_iterate(const MoveSet& g, const Window& w, int cap,
                             std::int64_t* us_out) {
  const auto t0 = std::chrono::steady_clock::now();
  IterationTrace trace = iterate_star(g, w, cap);
  const auto t1 = std::chrono::steady_clock::now();
  if (us_out)
    *us_out = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  return trace;
}

std::string two_digits(std::size_t i) {
  return (i < 10 ? "0" : "") + std::to_string(i);
}

int run_outcomes(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  const OutcomeGrid grid = compute_outcomes(g, w);
  std::cout << "P: " << format_vectors(grid.positions_with(Outcome::P).to_vectors()) << "\n";
  std::cout << "N: " << format_vectors(grid.positions_with(Outcome::N).to_vectors()) << "\n";
  std::cout << "terminal: "
            << format_vectors(grid.positions_with(Outcome::TerminalN).to_vectors()) << "\n";
  return 0;
}

int run_star(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  std::cout << format_vectors(star(g, w).to_vectors()) << "\n";
  return 0;
}

int run_iterate(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  std::int64_t us = 0;
  const IterationTrace trace = timed_iterate(g, w, a.cap, &us);
  if (!a.out_path.empty())
    write_file(a.out_path, trace_to_json(TraceDocument{trace, g.label(), us}));
  std::cout << "stages: " << trace.stages.size() << "\n";
  if (trace.phi_window) {
    std::cout << "phi_window: " << *trace.phi_window << "\n";
    std::cout << "fixed_point: " << format_vectors(trace.fixed_point().to_vectors()) << "\n";
    return 0;
  }
  std::cout << "phi_window: not reached within cap " << a.cap << "\n";
  throw NotConverged("no window fixed point within " + std::to_string(a.cap) + " iterations");
}

int run_phi(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  const std::optional<int> phi = phi_window(g, w, a.cap);
  if (!phi)
    throw NotConverged("no window fixed point within " + std::to_string(a.cap) + " iterations");
  std::cout << *phi << "\n";
  return 0;
}

int run_reflexive(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  std::cout << (is_reflexive_window(g, w) ? "true" : "false") << "\n";
  return 0;
}

int run_sumset(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  std::cout << (sumset_reflexive_check(g, w) ? "true" : "false") << "\n";
  return 0;
}

int run_mk(const CommonArgs& a, Coord k) {
  Window w({500});
  if (!a.window_text.empty()) {
    const std::vector<Coord> bounds = parse_coord_list(a.window_text);
    if (bounds.size() != 1) throw std::runtime_error("mk is one-dimensional");
    w = Window(bounds);
  }
  std::cout << format_vectors(generate_mk(k, w).to_vectors()) << "\n";
  return 0;
}

int run_ak(Coord k) {
  std::cout << format_vectors(generate_ak(k).to_vectors()) << "\n";
  return 0;
}

int run_lemma3(const CommonArgs& a, Coord k, int stage) {
  Window w({500});
  if (!a.window_text.empty()) {
    const std::vector<Coord> bounds = parse_coord_list(a.window_text);
    if (bounds.size() != 1) throw std::runtime_error("lemma3 is one-dimensional");
    w = Window(bounds);
  }
  std::cout << format_vectors(lemma3_stage(k, stage, w).to_vectors()) << "\n";
  return 0;
}

int run_min1d(const CommonArgs& a, Coord k) {
  const ParsedMoves parsed = load_moves(a);
  if (parsed.dim != 1) throw std::runtime_error("min1d takes a one-dimensional move set");
  Window w = resolve_window(a, 1);
  const MoveSet x = MoveSet::from_vectors(w, parsed.vectors);
  std::cout << (verify_min1d(x, k, w) ? "true" : "false") << "\n";
  return 0;
}

int run_classify(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  std::cout << classify_min_moves(g).str() << "\n";
  return 0;
}

int run_lineperiod(const CommonArgs& a, const std::string& base_text,
                   const std::string& dir_text, bool iterate_first) {
  MoveSet s = game_on_window(a);
  const Window w = s.window();
  if (iterate_first) {
    const IterationTrace trace = timed_iterate(s, w, a.cap, nullptr);
    if (!trace.converged())
      throw NotConverged("no window fixed point within " + std::to_string(a.cap) +
                         " iterations");
    s = trace.fixed_point();
  }
  std::vector<Coord> base(static_cast<std::size_t>(w.dim()), 0);
  if (!base_text.empty()) base = parse_coord_list(base_text);
  const LinePeriodReport r = line_period(s, PositionVec(base),
                                         PositionVec(parse_coord_list(dir_text)));
  if (r.verdict == PeriodVerdict::Periodic)
    std::cout << "periodic period=" << r.period << " preperiod=" << r.preperiod
              << " confirmed=" << r.confirmed_length << "\n";
  else
    std::cout << "inconclusive confirmed=" << r.confirmed_length << "\n";
  return 0;
}

int run_render(const CommonArgs& a, const std::string& origin_text,
               const std::string& stage_text) {
  if (a.out_path.empty()) throw std::runtime_error("render requires --out");
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  const IterationTrace trace = timed_iterate(g, w, a.cap, nullptr);

  std::vector<std::size_t> picks;
  if (stage_text == "all") {
    for (std::size_t i = 0; i < trace.stages.size(); ++i) picks.push_back(i);
  } else if (stage_text == "last") {
    picks.push_back(trace.stages.size() - 1);
  } else {
    if (stage_text.empty() ||
        stage_text.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("--stage must be all, last, or a stage index");
    const std::size_t i = static_cast<std::size_t>(std::stoul(stage_text));
    if (i >= trace.stages.size())
      throw std::runtime_error("stage " + stage_text + " out of range (have " +
                               std::to_string(trace.stages.size()) + ")");
    picks.push_back(i);
  }

  if (w.dim() == 1) {
    std::vector<MoveSet> rows;
    for (std::size_t i : picks) rows.push_back(trace.stages[i]);
    const std::string path = a.out_path + ".svg";
    write_file(path, render_stage_strip_svg(rows));
    std::cout << "wrote " << path << "\n";
    return 0;
  }
  if (w.dim() != 2) throw std::runtime_error("render supports 1D and 2D games");
  const RasterOrigin origin =
      origin_text == "top-left" ? RasterOrigin::TopLeft : RasterOrigin::BottomLeft;
  for (std::size_t i : picks) {
    const std::string path = a.out_path + "_stage" + two_digits(i) + ".pgm";
    write_file(path, render_pgm(trace.stages[i], origin));
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

int run_oracle_check(const CommonArgs& a) {
  const MoveSet g = game_on_window(a);
  const Window& w = g.window();
  const OutcomeGrid fast = compute_outcomes(g, w);
  const OutcomeGrid slow = oracle_outcomes(g, w);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (fast.at(i) != slow.at(i))
      throw std::logic_error("engine and oracle disagree at " +
                             to_string(w.position_at(i)));
  std::cout << "match cells=" << w.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mstar: misere-play subtraction games on d-dimensional windows.\n"
      "Computes outcome grids, iterates the star operator (moves := P-positions)\n"
      "to its window fixed point, and checks the structural results about the\n"
      "limits. Move sets come inline (--moves \"4,9\" or --moves \"(4,0);(0,3)\")\n"
      "or from a file (--file, 'dim=<d>' header then one vector per line).\n"
      "Window defaults: 500 in 1D, 120x120 in 2D. SSL_THREADS caps engine\n"
      "parallelism (0 or unset = auto)."};
  app.require_subcommand(1);

  CommonArgs args;
  Coord k = 0;
  int stage = 1;
  std::string base_text;
  std::string dir_text;
  bool iterate_first = false;
  std::string origin_text = "bottom-left";
  std::string stage_text = "all";

  auto add_moves = [&](CLI::App* sub) {
    sub->add_option("--moves", args.moves_text,
                    "inline move set: \"4,9\" (1D) or \"(4,0);(0,3)\"");
    sub->add_option("--file", args.file_path, "move set file (dim=<d> header)");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", args.window_text,
                    "per-axis exclusive bounds, comma separated (e.g. 60 or 60,60)");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", args.cap, "iteration cap (default 64)");
  };

  CLI::App* outcomes = app.add_subcommand("outcomes", "P/N/terminal cells of the window");
  add_moves(outcomes);
  add_window(outcomes);

  CLI::App* star_cmd = app.add_subcommand("star", "P-positions, the star of the move set");
  add_moves(star_cmd);
  add_window(star_cmd);

  CLI::App* iterate = app.add_subcommand(
      "iterate", "iterate star to the window fixed point; --out writes the trace as JSON");
  add_moves(iterate);
  add_window(iterate);
  add_cap(iterate);
  iterate->add_option("--out", args.out_path, "trace document path");

  CLI::App* phi = app.add_subcommand("phi", "first stage index with M^i = M^(i+1)");
  add_moves(phi);
  add_window(phi);
  add_cap(phi);

  CLI::App* reflexive =
      app.add_subcommand("reflexive", "is the set equal to its own star on the window?");
  add_moves(reflexive);
  add_window(reflexive);

  CLI::App* sumset = app.add_subcommand(
      "sumset", "reflexivity via the sumset test: complement-minus-terminals = A+A");
  add_moves(sumset);
  add_window(sumset);

  CLI::App* mk = app.add_subcommand("mk", "the 1D limit set M_k (period 3k-1)");
  mk->add_option("--k", k, "block parameter")->required();
  add_window(mk);

  CLI::App* ak = app.add_subcommand("ak", "the two-element solving set A_k = {k, 2k-1}");
  ak->add_option("--k", k, "block parameter")->required();

  CLI::App* lemma3 = app.add_subcommand("lemma3", "closed form of iterate({k}) stage 1..5");
  lemma3->add_option("--k", k, "subtraction amount, k >= 2")->required();
  lemma3->add_option("--stage", stage, "stage index 1..5")->required();
  add_window(lemma3);

  CLI::App* min1d = app.add_subcommand(
      "min1d", "does the 1D set X with min k satisfy A_k subset X subset M_k (iff star(X) = M_k)?");
  add_moves(min1d);
  add_window(min1d);
  min1d->add_option("--k", k, "minimum of X")->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "2D class by minimal moves: tier 1/2/3 = |min|, sub a/b/c by axis count");
  add_moves(classify);
  add_window(classify);

  CLI::App* lineperiod = app.add_subcommand(
      "lineperiod", "eventual period of membership along base + t*dir inside the window");
  add_moves(lineperiod);
  add_window(lineperiod);
  add_cap(lineperiod);
  lineperiod->add_option("--base", base_text, "start cell, comma separated (default origin)");
  lineperiod->add_option("--dir", dir_text, "direction, comma separated")->required();
  lineperiod->add_flag("--iterate", iterate_first,
                       "sample the window fixed point of the game instead of the set itself");

  CLI::App* render = app.add_subcommand(
      "render",
      "render iteration stages: 1D -> <out>.svg row strips, 2D -> <out>_stageNN.pgm rasters "
      "(P5, member=0 black). --origin bottom-left (default, y=0 at the bottom row, "
      "mathematical orientation) or top-left (y=0 in pixel row 0)");
  add_moves(render);
  add_window(render);
  add_cap(render);
  render->add_option("--out", args.out_path, "output path prefix")->required();
  render->add_option("--origin", origin_text, "bottom-left | top-left")
      ->check(CLI::IsMember({"bottom-left", "top-left"}));
  render->add_option("--stage", stage_text, "all | last | <index> (default all)");

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "compare the engine against the independent brute-force oracle");
  add_moves(oracle_check);
  add_window(oracle_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize CLI11's exit codes: 0 for --help, 1 for any usage error
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (outcomes->parsed()) return run_outcomes(args);
    if (star_cmd->parsed()) return run_star(args);
    if (iterate->parsed()) return run_iterate(args);
    if (phi->parsed()) return run_phi(args);
    if (reflexive->parsed()) return run_reflexive(args);
    if (sumset->parsed()) return run_sumset(args);
    if (mk->parsed()) return run_mk(args, k);
    if (ak->parsed()) return run_ak(k);
    if (lemma3->parsed()) return run_lemma3(args, k, stage);
    if (min1d->parsed()) return run_min1d(args, k);
    if (classify->parsed()) return run_classify(args);
    if (lineperiod->parsed()) return run_lineperiod(args, base_text, dir_text, iterate_first);
    if (render->parsed()) return run_render(args, origin_text, stage_text);
    if (oracle_check->parsed()) return run_oracle_check(args);
  } catch (const NotConverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
