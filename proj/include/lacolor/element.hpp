#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lacolor {

enum class Side : std::uint8_t { Left, Right };

struct Letter;

/// Normal form of a group element. The variant in use must match the
/// GroupSpec the element belongs to:
///   Z    -> Integer(value)
///   prod -> Pair(first, second)
///   free -> Word(reduced alternating letters)
///   hnn  -> Hnn(power i, base h), meaning t^i·h
class Element {
 public:
  enum class Kind : std::uint8_t { Integer, Pair, Word, Hnn };

  Element() = default;

  static Element integer(std::int64_t value);
  static Element pair(Element first, Element second);
  /// No reducedness check here; see free_word() in groups.hpp.
  static Element word(std::vector<Letter> letters);
  static Element hnn(std::int64_t power, Element base);

  Kind kind() const noexcept { return kind_; }
  std::int64_t value() const;
  std::int64_t power() const;
  const Element& first() const;
  const Element& second() const;
  const Element& base() const;
  const std::vector<Letter>& letters() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  Kind kind_ = Kind::Integer;
  std::int64_t scalar_ = 0;
  std::vector<Element> parts_;
  std::vector<Letter> letters_;
};

struct Letter {
  Side side;
  Element value;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.side == b.side && a.value == b.value;
  }
};

/// Byte-exact, length-prefixed, factor-tagged encoding. Two elements of the
/// same spec are equal iff their serializations are identical; byte order of
/// Integer payloads follows numeric order.
std::string serialize(const Element& e);

/// Order by (norm, serialization) is the deterministic tie-break used across
/// reports; this compares the serialization part.
std::strong_ordering serial_order(const Element& a, const Element& b);

}  // namespace lacolor
