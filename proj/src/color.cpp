#include "lacolor/color.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lacolor/errors.hpp"

namespace lacolor {

Color Color::bit(int v) {
  if (v != 0 && v != 1) throw DomainError("Color::bit: value out of range");
  return Color(Tag::Bit, v);
}

Color Color::trit(int v) {
  if (v < 0 || v > 2) throw DomainError("Color::trit: value out of range");
  return Color(Tag::Trit, v);
}

Color Color::tuple(std::vector<Color> items) {
  Color c(Tag::Tuple, 0);
  c.items_ = std::move(items);
  return c;
}

std::string Color::to_string() const {
  switch (tag_) {
    case Tag::Bit:
    case Tag::Trit:
      return std::to_string(value_);
    case Tag::Alpha:
      return "alpha";
    case Tag::Beta:
      return "beta";
    case Tag::Root:
      return "root";
    case Tag::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        out += items_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

std::size_t Color::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(tag_) * 31 + static_cast<std::size_t>(value_ + 1);
  for (const auto& item : items_) h = h * 1000003u ^ item.hash();
  return h;
}

bool operator==(const Color& a, const Color& b) {
  return a.tag_ == b.tag_ && a.value_ == b.value_ && a.items_ == b.items_;
}

std::strong_ordering operator<=>(const Color& a, const Color& b) {
  if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  const std::size_t n = std::min(a.items_.size(), b.items_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
  }
  return a.items_.size() <=> b.items_.size();
}

// ---------------------------------------------------------------------------

struct Palette::Node {
  enum class Kind { Atoms, Product, Extended } kind;
  std::vector<Color> atoms;      // Atoms, or extra atoms for Extended
  std::vector<Palette> factors;  // Product factors, or {base} for Extended
};

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

}  // namespace

Palette Palette::atoms(std::vector<Color> colors) {
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (colors[i] == colors[j]) throw ConstructionError("Palette::atoms: duplicate color");
    }
  }
  return Palette(std::make_shared<const Node>(Node{Node::Kind::Atoms, std::move(colors), {}}));
}

Palette Palette::product(std::vector<Palette> factors) {
  return Palette(
      std::make_shared<const Node>(Node{Node::Kind::Product, {}, std::move(factors)}));
}

Palette Palette::extended(Palette base, std::vector<Color> extra) {
  for (const auto& c : extra) {
    if (base.contains(c)) throw ConstructionError("Palette::extended: extra color already present");
  }
  return Palette(std::make_shared<const Node>(
      Node{Node::Kind::Extended, std::move(extra), {std::move(base)}}));
}

bool Palette::contains(const Color& c) const {
  switch (node_->kind) {
    case Node::Kind::Atoms:
      return std::find(node_->atoms.begin(), node_->atoms.end(), c) != node_->atoms.end();
    case Node::Kind::Product: {
      if (c.tag() != Color::Tag::Tuple || c.items().size() != node_->factors.size()) return false;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        if (!node_->factors[i].contains(c.items()[i])) return false;
      }
      return true;
    }
    case Node::Kind::Extended:
      return node_->factors[0].contains(c) ||
             std::find(node_->atoms.begin(), node_->atoms.end(), c) != node_->atoms.end();
  }
  return false;
}

std::uint64_t Palette::size() const {
  switch (node_->kind) {
    case Node::Kind::Atoms:
      return node_->atoms.size();
    case Node::Kind::Product: {
      std::uint64_t n = 1;
      for (const auto& f : node_->factors) n = sat_mul(n, f.size());
      return n;
    }
    case Node::Kind::Extended:
      return sat_add(node_->factors[0].size(), node_->atoms.size());
  }
  return 0;
}

std::optional<std::uint64_t> Palette::index_of(const Color& c) const {
  switch (node_->kind) {
    case Node::Kind::Atoms: {
      auto it = std::find(node_->atoms.begin(), node_->atoms.end(), c);
      if (it == node_->atoms.end()) return std::nullopt;
      return static_cast<std::uint64_t>(it - node_->atoms.begin());
    }
    case Node::Kind::Product: {
      if (c.tag() != Color::Tag::Tuple || c.items().size() != node_->factors.size()) {
        return std::nullopt;
      }
      std::uint64_t index = 0;
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        auto sub = node_->factors[i].index_of(c.items()[i]);
        if (!sub) return std::nullopt;
        index = sat_add(sat_mul(index, node_->factors[i].size()), *sub);
      }
      return index;
    }
    case Node::Kind::Extended: {
      if (auto sub = node_->factors[0].index_of(c)) return sub;
      auto it = std::find(node_->atoms.begin(), node_->atoms.end(), c);
      if (it == node_->atoms.end()) return std::nullopt;
      return sat_add(node_->factors[0].size(),
                     static_cast<std::uint64_t>(it - node_->atoms.begin()));
    }
  }
  return std::nullopt;
}

Color Palette::at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("Palette::at: index out of range");
  switch (node_->kind) {
    case Node::Kind::Atoms:
      return node_->atoms[index];
    case Node::Kind::Product: {
      std::vector<Color> items(node_->factors.size(), Color::root());
      for (std::size_t i = node_->factors.size(); i-- > 0;) {
        const std::uint64_t radix = node_->factors[i].size();
        items[i] = node_->factors[i].at(index % radix);
        index /= radix;
      }
      return Color::tuple(std::move(items));
    }
    case Node::Kind::Extended: {
      const std::uint64_t base = node_->factors[0].size();
      if (index < base) return node_->factors[0].at(index);
      return node_->atoms[index - base];
    }
  }
  return Color::root();
}

std::vector<Color> Palette::enumerate(std::uint64_t limit) const {
  const std::uint64_t n = size();
  if (n > limit) throw std::length_error("Palette::enumerate: palette has " + std::to_string(n) +
                                         " colors, limit " + std::to_string(limit));
  std::vector<Color> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::string Palette::describe() const {
  switch (node_->kind) {
    case Node::Kind::Atoms: {
      std::string out = "{";
      for (std::size_t i = 0; i < node_->atoms.size(); ++i) {
        if (i) out += ',';
        out += node_->atoms[i].to_string();
      }
      return out + "}";
    }
    case Node::Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < node_->factors.size(); ++i) {
        if (i) out += " x ";
        out += node_->factors[i].describe();
      }
      return out + ")";
    }
    case Node::Kind::Extended: {
      std::string out = "(" + node_->factors[0].describe() + " + {";
      for (std::size_t i = 0; i < node_->atoms.size(); ++i) {
        if (i) out += ',';
        out += node_->atoms[i].to_string();
      }
      return out + "})";
    }
  }
  return {};
}

}  // namespace lacolor
