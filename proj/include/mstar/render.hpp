#pragma once

#include <string>
#include <vector>

#include "mstar/move_set.hpp"

namespace mstar {

// Pixel row 0 of the raster is the top of the image; BottomLeft places y = 0
// on the bottom row (mathematical orientation, the default), TopLeft places
// y = 0 on the top row.
enum class RasterOrigin { BottomLeft, TopLeft };

// Binary PGM (P5) of a 2D set: members black (0), non-members white (255),
// image width = x bound, height = y bound.
std::string render_pgm(const MoveSet& s, RasterOrigin origin = RasterOrigin::BottomLeft);

// SVG of 1D stages as horizontal strips, one row per stage (stage 0 on top),
// members drawn as filled cells. Deterministic byte-for-byte.
std::string render_stage_strip_svg(const std::vector<MoveSet>& stages);

}  // namespace mstar
