#pragma once

// Grid rendering of a prod(Z,Z) coloring over [-N, N]².

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "lacolor/colorings.hpp"

namespace lacolor {

struct GridImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint64_t palette_size = 0;
  std::vector<std::uint64_t> indices;  // stable palette index per pixel, row-major
};

/// Row 0 is y = +N, column 0 is x = -N. Throws StructuralError unless the
/// coloring is over prod(Z,Z).
GridImage render_grid(const Coloring& f, std::int64_t n);

/// index·255/(size-1), or 0 for a one-color palette.
std::uint8_t gray_level(std::uint64_t index, std::uint64_t palette_size);
/// Fixed color table for palettes above 256 entries.
std::array<std::uint8_t, 3> table_color(std::uint64_t index);

/// P5 for palettes of at most 256 colors, P6 otherwise.
void write_image(std::ostream& out, const GridImage& image);

}  // namespace lacolor
