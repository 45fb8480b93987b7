#include "lacolor/element.hpp"

#include "lacolor/errors.hpp"

namespace lacolor {

Element Element::integer(std::int64_t value) {
  Element e;
  e.kind_ = Kind::Integer;
  e.scalar_ = value;
  return e;
}

Element Element::pair(Element first, Element second) {
  Element e;
  e.kind_ = Kind::Pair;
  e.parts_.reserve(2);
  e.parts_.push_back(std::move(first));
  e.parts_.push_back(std::move(second));
  return e;
}

Element Element::word(std::vector<Letter> letters) {
  Element e;
  e.kind_ = Kind::Word;
  e.letters_ = std::move(letters);
  return e;
}

Element Element::hnn(std::int64_t power, Element base) {
  Element e;
  e.kind_ = Kind::Hnn;
  e.scalar_ = power;
  e.parts_.push_back(std::move(base));
  return e;
}

std::int64_t Element::value() const {
  if (kind_ != Kind::Integer) throw StructuralError("value(): element is not an integer");
  return scalar_;
}

std::int64_t Element::power() const {
  if (kind_ != Kind::Hnn) throw StructuralError("power(): element is not an hnn element");
  return scalar_;
}

const Element& Element::first() const {
  if (kind_ != Kind::Pair) throw StructuralError("first(): element is not a pair");
  return parts_[0];
}

const Element& Element::second() const {
  if (kind_ != Kind::Pair) throw StructuralError("second(): element is not a pair");
  return parts_[1];
}

const Element& Element::base() const {
  if (kind_ != Kind::Hnn) throw StructuralError("base(): element is not an hnn element");
  return parts_[0];
}

const std::vector<Letter>& Element::letters() const {
  if (kind_ != Kind::Word) throw StructuralError("letters(): element is not a word");
  return letters_;
}

bool operator==(const Element& a, const Element& b) {
  return a.kind_ == b.kind_ && a.scalar_ == b.scalar_ && a.parts_ == b.parts_ &&
         a.letters_ == b.letters_;
}

namespace {

void put_u64(std::string& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((v >> shift) & 0xff));
  }
}

// Sign bit flipped so that unsigned byte order equals signed numeric order.
void put_i64(std::string& out, std::int64_t v) {
  put_u64(out, static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << 63));
}

void serialize_into(std::string& out, const Element& e) {
  switch (e.kind()) {
    case Element::Kind::Integer:
      out.push_back('\x01');
      put_i64(out, e.value());
      break;
    case Element::Kind::Pair:
      out.push_back('\x02');
      serialize_into(out, e.first());
      serialize_into(out, e.second());
      break;
    case Element::Kind::Word:
      out.push_back('\x03');
      put_u64(out, e.letters().size());
      for (const auto& letter : e.letters()) {
        out.push_back(letter.side == Side::Left ? 'L' : 'R');
        serialize_into(out, letter.value);
      }
      break;
    case Element::Kind::Hnn:
      out.push_back('\x04');
      put_i64(out, e.power());
      serialize_into(out, e.base());
      break;
  }
}

}  // namespace

std::string serialize(const Element& e) {
  std::string out;
  serialize_into(out, e);
  return out;
}

std::strong_ordering serial_order(const Element& a, const Element& b) {
  const int c = serialize(a).compare(serialize(b));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace lacolor
