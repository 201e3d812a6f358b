#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mstar/move_set.hpp"
#include "mstar/position.hpp"
#include "mstar/star.hpp"

namespace mstar {

// Move set text format:
//   dim=<d>
//   c0,c1,...,c{d-1}      (one vector per line)
// '#' starts a comment, blank lines are skipped, duplicates collapse.
struct ParsedMoves {
  int dim = 0;
  std::vector<PositionVec> vectors;  // lexicographic order, deduplicated
};

ParsedMoves parse_move_set_text(std::istream& in);
ParsedMoves parse_move_set_file(const std::string& path);
void write_move_set_text(std::ostream& out, const MoveSet& s);

// Inline forms accepted on the command line: "4,9" (1D, one scalar per entry,
// comma separated) or "(4,0);(0,3)" (semicolon separated tuples).
ParsedMoves parse_inline_moves(const std::string& text);

// "60" or "60,60": per-axis window bounds.
std::vector<Coord> parse_coord_list(const std::string& text);

// Serializable record of one iteration run. timing_us is wall time in whole
// microseconds (kept integral so the JSON round-trips losslessly).
struct TraceDocument {
  IterationTrace trace;
  std::string input_label;
  std::int64_t timing_us = 0;
};

std::string trace_to_json(const TraceDocument& doc);
TraceDocument trace_from_json(const std::string& json_text);

}  // namespace mstar
