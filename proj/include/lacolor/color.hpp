#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lacolor {

/// A color: an atom (bit, trit, sentinel α/β, root sentinel) or a tuple of
/// colors. Totally ordered by (tag, value, items).
class Color {
 public:
  enum class Tag : std::uint8_t { Bit, Trit, Alpha, Beta, Root, Tuple };

  /// The root sentinel.
  Color() : Color(Tag::Root, 0) {}

  static Color bit(int v);
  static Color trit(int v);
  static Color alpha() { return Color(Tag::Alpha, 0); }
  static Color beta() { return Color(Tag::Beta, 0); }
  static Color root() { return Color(Tag::Root, 0); }
  static Color tuple(std::vector<Color> items);

  Tag tag() const noexcept { return tag_; }
  int value() const noexcept { return value_; }
  const std::vector<Color>& items() const noexcept { return items_; }

  /// "0", "2", "alpha", "beta", "root", "(1,0)".
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Color& a, const Color& b);
  friend std::strong_ordering operator<=>(const Color& a, const Color& b);

 private:
  Color(Tag tag, int value) : tag_(tag), value_(static_cast<std::int8_t>(value)) {}
  Tag tag_;
  std::int8_t value_;
  std::vector<Color> items_;
};

struct ColorHash {
  std::size_t operator()(const Color& c) const noexcept { return c.hash(); }
};

/// Finite palette described symbolically so that large nested products stay
/// cheap: an explicit atom list, a product of palettes (colors are tuples),
/// or a palette extended by extra atoms. Enumeration order is stable:
/// atoms in list order, products in mixed radix with the last factor
/// fastest, extensions after the base.
class Palette {
 public:
  static Palette atoms(std::vector<Color> colors);
  static Palette bits() { return atoms({Color::bit(0), Color::bit(1)}); }
  static Palette trits() { return atoms({Color::trit(0), Color::trit(1), Color::trit(2)}); }
  static Palette product(std::vector<Palette> factors);
  static Palette extended(Palette base, std::vector<Color> extra);

  bool contains(const Color& c) const;
  /// Saturates at UINT64_MAX.
  std::uint64_t size() const;
  std::optional<std::uint64_t> index_of(const Color& c) const;
  Color at(std::uint64_t index) const;
  /// Throws std::length_error if size() > limit.
  std::vector<Color> enumerate(std::uint64_t limit = 1u << 20) const;
  /// E.g. "{0,1} x ({0,1} + {alpha})".
  std::string describe() const;

 private:
  struct Node;
  explicit Palette(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace lacolor
