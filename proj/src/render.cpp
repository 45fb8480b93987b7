#include "lacolor/render.hpp"

#include <array>
#include <string>

#include "lacolor/errors.hpp"

namespace lacolor {

GridImage render_grid(const Coloring& f, std::int64_t n) {
  const GroupSpec zz = GroupSpec::prod(GroupSpec::z(), GroupSpec::z());
  if (!(f.spec() == zz)) {
    throw StructuralError("render grid: only prod(Z,Z) is supported, got " + f.spec().to_string());
  }
  if (n < 0) throw DomainError("render grid: n must be non-negative");
  GridImage image;
  image.width = image.height = static_cast<std::size_t>(2 * n + 1);
  image.palette_size = f.palette().size();
  image.indices.reserve(image.width * image.height);
  for (std::int64_t y = n; y >= -n; --y) {
    for (std::int64_t x = -n; x <= n; ++x) {
      const Color c = f(Element::pair(Element::integer(x), Element::integer(y)));
      const auto index = f.palette().index_of(c);
      if (!index) throw ConstructionError("render grid: color outside the palette: " + c.to_string());
      image.indices.push_back(*index);
    }
  }
  return image;
}

std::uint8_t gray_level(std::uint64_t index, std::uint64_t palette_size) {
  if (palette_size <= 1) return 0;
  return static_cast<std::uint8_t>(index * 255 / (palette_size - 1));
}

std::array<std::uint8_t, 3> table_color(std::uint64_t index) {
  // Golden-ratio hashing spreads neighbouring indices across the cube.
  const std::uint64_t h = (index + 1) * 0x9E3779B97F4A7C15ull;
  return {static_cast<std::uint8_t>(h >> 56), static_cast<std::uint8_t>(h >> 48),
          static_cast<std::uint8_t>(h >> 40)};
}

void write_image(std::ostream& out, const GridImage& image) {
  const bool gray = image.palette_size <= 256;
  out << (gray ? "P5" : "P6") << ' ' << image.width << ' ' << image.height << ' ' << 255 << '\n';
  std::string bytes;
  bytes.reserve(image.indices.size() * (gray ? 1 : 3));
  for (auto index : image.indices) {
    if (gray) {
      bytes.push_back(static_cast<char>(gray_level(index, image.palette_size)));
    } else {
      for (auto channel : table_color(index)) bytes.push_back(static_cast<char>(channel));
    }
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace lacolor
