#include "mstar/render.hpp"

#include <stdexcept>
#include <string>

namespace mstar {

std::string render_pgm(const MoveSet& s, RasterOrigin origin) {
  const Window& w = s.window();
  if (w.dim() != 2) throw std::invalid_argument("render_pgm: 2D sets only");
  const Coord width = w.bound(0);
  const Coord height = w.bound(1);
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (Coord row = 0; row < height; ++row) {
    const Coord y = origin == RasterOrigin::BottomLeft ? height - 1 - row : row;
    for (Coord x = 0; x < width; ++x) {
      const std::size_t idx =
          static_cast<std::size_t>(x) * w.stride(0) + static_cast<std::size_t>(y);
      out.push_back(s.test(idx) ? '\x00' : '\xff');
    }
  }
  return out;
}

std::string render_stage_strip_svg(const std::vector<MoveSet>& stages) {
  if (stages.empty()) throw std::invalid_argument("render_stage_strip_svg: no stages");
  const Window& w = stages.front().window();
  if (w.dim() != 1) throw std::invalid_argument("render_stage_strip_svg: 1D stages only");
  for (const MoveSet& s : stages)
    if (!(s.window() == w))
      throw std::invalid_argument("render_stage_strip_svg: stages on different windows");

  constexpr int cell = 10;
  constexpr int gap = 4;
  constexpr int pad = 6;
  constexpr int label_w = 32;
  const int cols = static_cast<int>(w.bound(0));
  const int rows = static_cast<int>(stages.size());
  const int width = label_w + cols * cell + pad;
  const int height = pad + rows * (cell + gap) - gap + pad;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
  for (int r = 0; r < rows; ++r) {
    const int y0 = pad + r * (cell + gap);
    svg += "<text x=\"" + std::to_string(pad) + "\" y=\"" + std::to_string(y0 + cell - 2) +
           "\" font-family=\"monospace\" font-size=\"10\">" + std::to_string(r) + "</text>\n";
    svg += "<rect x=\"" + std::to_string(label_w) + "\" y=\"" + std::to_string(y0) +
           "\" width=\"" + std::to_string(cols * cell) + "\" height=\"" + std::to_string(cell) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    const auto& bits = stages[static_cast<std::size_t>(r)].bits();
    for (std::size_t i = bits.find_first(); i != MoveSet::Bits::npos; i = bits.find_next(i)) {
      svg += "<rect x=\"" + std::to_string(label_w + static_cast<int>(i) * cell) + "\" y=\"" +
             std::to_string(y0) + "\" width=\"" + std::to_string(cell) + "\" height=\"" +
             std::to_string(cell) + "\" fill=\"#1f1f1f\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace mstar
