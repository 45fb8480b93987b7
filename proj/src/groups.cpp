#include "lacolor/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "lacolor/errors.hpp"

namespace lacolor {

namespace {

using Kind = GroupSpec::Kind;

const GroupSpec& factor(const GroupSpec& free_spec, Side side) {
  return side == Side::Left ? free_spec.left() : free_spec.right();
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

std::string describe_mismatch(const GroupSpec& spec) {
  return "element does not conform to " + spec.to_string();
}

}  // namespace

Element identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case Kind::Z:
      return Element::integer(0);
    case Kind::Prod:
      return Element::pair(identity(spec.left()), identity(spec.right()));
    case Kind::Free:
      return Element::word({});
    case Kind::Hnn:
      return Element::hnn(0, identity(spec.base()));
  }
  return {};
}

bool is_identity(const GroupSpec& spec, const Element& x) {
  switch (spec.kind()) {
    case Kind::Z:
      return x.kind() == Element::Kind::Integer && x.value() == 0;
    case Kind::Prod:
      return x.kind() == Element::Kind::Pair && is_identity(spec.left(), x.first()) &&
             is_identity(spec.right(), x.second());
    case Kind::Free:
      return x.kind() == Element::Kind::Word && x.letters().empty();
    case Kind::Hnn:
      return x.kind() == Element::Kind::Hnn && x.power() == 0 &&
             is_identity(spec.base(), x.base());
  }
  return false;
}

bool conforms(const GroupSpec& spec, const Element& x) {
  switch (spec.kind()) {
    case Kind::Z:
      return x.kind() == Element::Kind::Integer;
    case Kind::Prod:
      return x.kind() == Element::Kind::Pair && conforms(spec.left(), x.first()) &&
             conforms(spec.right(), x.second());
    case Kind::Free: {
      if (x.kind() != Element::Kind::Word) return false;
      const auto& letters = x.letters();
      for (std::size_t i = 0; i < letters.size(); ++i) {
        const auto& f = factor(spec, letters[i].side);
        if (!conforms(f, letters[i].value) || is_identity(f, letters[i].value)) return false;
        if (i > 0 && letters[i - 1].side == letters[i].side) return false;
      }
      return true;
    }
    case Kind::Hnn:
      return x.kind() == Element::Kind::Hnn && conforms(spec.base(), x.base());
  }
  return false;
}

void check_conforms(const GroupSpec& spec, const Element& x) {
  if (!conforms(spec, x)) throw StructuralError(describe_mismatch(spec));
}

Element free_word(const GroupSpec& spec, std::vector<Letter> letters) {
  if (spec.kind() != Kind::Free) throw StructuralError("free_word: spec is not a free product");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& f = factor(spec, letters[i].side);
    check_conforms(f, letters[i].value);
    if (is_identity(f, letters[i].value)) {
      throw StructuralError("free_word: identity letter at position " + std::to_string(i));
    }
    if (i > 0 && letters[i - 1].side == letters[i].side) {
      throw StructuralError("free_word: adjacent letters from the same factor at position " +
                            std::to_string(i));
    }
  }
  return Element::word(std::move(letters));
}

Element apply_automorphism(const GroupSpec& hnn_spec, std::int64_t power, const Element& h) {
  if (hnn_spec.automorphism() == Automorphism::Identity || power % 2 == 0) return h;
  return inverse(hnn_spec.base(), h);
}

Element multiply(const GroupSpec& spec, const Element& x, const Element& y) {
  switch (spec.kind()) {
    case Kind::Z:
      return Element::integer(x.value() + y.value());
    case Kind::Prod:
      return Element::pair(multiply(spec.left(), x.first(), y.first()),
                           multiply(spec.right(), x.second(), y.second()));
    case Kind::Free: {
      std::vector<Letter> out = x.letters();
      const auto& rhs = y.letters();
      std::size_t i = 0;
      while (!out.empty() && i < rhs.size() && out.back().side == rhs[i].side) {
        const Side side = rhs[i].side;
        const auto& f = factor(spec, side);
        Element merged = multiply(f, out.back().value, rhs[i].value);
        out.pop_back();
        ++i;
        if (!is_identity(f, merged)) {
          out.push_back({side, std::move(merged)});
          break;
        }
      }
      out.insert(out.end(), rhs.begin() + static_cast<std::ptrdiff_t>(i), rhs.end());
      return Element::word(std::move(out));
    }
    case Kind::Hnn: {
      const std::int64_t j = y.power();
      return Element::hnn(x.power() + j,
                          multiply(spec.base(), apply_automorphism(spec, j, x.base()), y.base()));
    }
  }
  return {};
}

Element inverse(const GroupSpec& spec, const Element& x) {
  switch (spec.kind()) {
    case Kind::Z:
      return Element::integer(-x.value());
    case Kind::Prod:
      return Element::pair(inverse(spec.left(), x.first()), inverse(spec.right(), x.second()));
    case Kind::Free: {
      const auto& letters = x.letters();
      std::vector<Letter> out;
      out.reserve(letters.size());
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.push_back({it->side, inverse(factor(spec, it->side), it->value)});
      }
      return Element::word(std::move(out));
    }
    case Kind::Hnn: {
      // (t^i h)^{-1} = h^{-1} t^{-i} = t^{-i} θ^{-i}(h^{-1}); θ^{-i} = θ^{i} here.
      const std::int64_t i = x.power();
      return Element::hnn(-i, apply_automorphism(spec, i, inverse(spec.base(), x.base())));
    }
  }
  return {};
}

std::vector<Element> generators(const GroupSpec& spec) {
  std::vector<Element> out;
  switch (spec.kind()) {
    case Kind::Z:
      out = {Element::integer(1), Element::integer(-1)};
      break;
    case Kind::Prod: {
      const Element el = identity(spec.left());
      const Element er = identity(spec.right());
      for (auto& g : generators(spec.left())) out.push_back(Element::pair(std::move(g), er));
      for (auto& g : generators(spec.right())) out.push_back(Element::pair(el, std::move(g)));
      break;
    }
    case Kind::Free:
      for (auto& g : generators(spec.left())) {
        out.push_back(Element::word({Letter{Side::Left, std::move(g)}}));
      }
      for (auto& g : generators(spec.right())) {
        out.push_back(Element::word({Letter{Side::Right, std::move(g)}}));
      }
      break;
    case Kind::Hnn:
      for (auto& g : generators(spec.base())) out.push_back(Element::hnn(0, std::move(g)));
      out.push_back(Element::hnn(1, identity(spec.base())));
      out.push_back(Element::hnn(-1, identity(spec.base())));
      break;
  }
  return out;
}

std::uint64_t word_norm(const GroupSpec& spec, const Element& g) {
  switch (spec.kind()) {
    case Kind::Z:
      return abs_u64(g.value());
    case Kind::Prod:
      return word_norm(spec.left(), g.first()) + word_norm(spec.right(), g.second());
    case Kind::Free: {
      std::uint64_t total = 0;
      for (const auto& letter : g.letters()) {
        total += word_norm(factor(spec, letter.side), letter.value);
      }
      return total;
    }
    case Kind::Hnn:
      return abs_u64(g.power()) + word_norm(spec.base(), g.base());
  }
  return 0;
}

std::uint64_t displacement(const GroupSpec& spec, const Element& g, const Element& h) {
  return word_norm(spec, multiply(spec, inverse(spec, h), multiply(spec, g, h)));
}

std::optional<std::size_t> Ball::find(const Element& g) const {
  auto it = index.find(serialize(g));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t Ball::prefix_size(std::size_t r) const {
  return static_cast<std::size_t>(
      std::upper_bound(norms.begin(), norms.end(), r) - norms.begin());
}

Ball ball(const GroupSpec& spec, std::size_t radius, std::size_t max_elements) {
  const auto gens = generators(spec);
  Ball result{spec, radius, {}, {}, {}};

  std::vector<std::pair<std::string, Element>> layer;
  std::unordered_map<std::string, std::uint32_t> seen;
  Element e = identity(spec);
  std::string key = serialize(e);
  seen.emplace(key, 0);
  layer.emplace_back(std::move(key), std::move(e));

  for (std::size_t depth = 0;; ++depth) {
    std::sort(layer.begin(), layer.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, element] : layer) {
      result.index.emplace(k, result.elements.size());
      result.elements.push_back(element);
      result.norms.push_back(static_cast<std::uint32_t>(depth));
    }
    if (depth == radius) break;

    std::vector<std::pair<std::string, Element>> next;
    for (const auto& [k, element] : layer) {
      for (const auto& gen : gens) {
        Element n = multiply(spec, element, gen);
        std::string nk = serialize(n);
        if (seen.contains(nk)) continue;
        if (seen.size() >= max_elements) {
          throw OverflowError("ball(" + spec.to_string() + ", " + std::to_string(radius) +
                              "): more than " + std::to_string(max_elements) + " elements");
        }
        seen.emplace(nk, static_cast<std::uint32_t>(depth + 1));
        next.emplace_back(std::move(nk), std::move(n));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return result;
}

namespace {

Element retract(const GroupSpec& free_spec, const Element& w, Side keep) {
  if (free_spec.kind() != Kind::Free) throw StructuralError("retraction of a non-free spec");
  const auto& f = factor(free_spec, keep);
  Element acc = identity(f);
  for (const auto& letter : w.letters()) {
    if (letter.side == keep) acc = multiply(f, acc, letter.value);
  }
  return acc;
}

}  // namespace

Element pi_retract(const GroupSpec& free_spec, const Element& w) {
  return retract(free_spec, w, Side::Left);
}

Element theta_retract(const GroupSpec& free_spec, const Element& w) {
  return retract(free_spec, w, Side::Right);
}

HnnParts hnn_decompose(const GroupSpec& hnn_spec, const Element& g) {
  if (hnn_spec.kind() != Kind::Hnn) throw StructuralError("hnn_decompose: not an hnn spec");
  return {g.power(), g.base()};
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

bool needs_brackets(const GroupSpec& spec) {
  return spec.kind() == Kind::Free || spec.kind() == Kind::Hnn;
}

void print_into(std::string& out, const GroupSpec& spec, const Element& x) {
  switch (spec.kind()) {
    case Kind::Z:
      out += std::to_string(x.value());
      break;
    case Kind::Prod:
      out += '(';
      print_into(out, spec.left(), x.first());
      out += ',';
      print_into(out, spec.right(), x.second());
      out += ')';
      break;
    case Kind::Free: {
      if (x.letters().empty()) {
        out += 'e';
        break;
      }
      bool first = true;
      for (const auto& letter : x.letters()) {
        if (!first) out += '.';
        first = false;
        out += letter.side == Side::Left ? 'L' : 'R';
        const auto& f = factor(spec, letter.side);
        if (needs_brackets(f)) out += '[';
        print_into(out, f, letter.value);
        if (needs_brackets(f)) out += ']';
      }
      break;
    }
    case Kind::Hnn:
      out += "t^" + std::to_string(x.power()) + ".h";
      print_into(out, spec.base(), x.base());
      break;
  }
}

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  Element parse_all(const GroupSpec& spec) {
    Element e = parse(spec);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("element text '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
      negative = true;
      pos_ += 3;
    }
    std::uint64_t magnitude = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, magnitude);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return negative ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude);
  }

  Element parse(const GroupSpec& spec) {
    switch (spec.kind()) {
      case Kind::Z:
        return Element::integer(parse_int());
      case Kind::Prod: {
        expect('(');
        Element a = parse(spec.left());
        expect(',');
        Element b = parse(spec.right());
        expect(')');
        return Element::pair(std::move(a), std::move(b));
      }
      case Kind::Free: {
        if (peek('e')) {
          ++pos_;
          return Element::word({});
        }
        std::vector<Letter> letters;
        for (;;) {
          skip_ws();
          Side side;
          if (peek('L')) {
            side = Side::Left;
          } else if (peek('R')) {
            side = Side::Right;
          } else {
            fail("expected a letter 'L' or 'R'");
          }
          ++pos_;
          const auto& f = factor(spec, side);
          if (needs_brackets(f)) {
            expect('[');
            letters.push_back({side, parse(f)});
            expect(']');
          } else {
            letters.push_back({side, parse(f)});
          }
          if (!peek('.')) break;
          ++pos_;
        }
        return free_word(spec, std::move(letters));
      }
      case Kind::Hnn: {
        expect('t');
        expect('^');
        const std::int64_t power = parse_int();
        expect('.');
        expect('h');
        return Element::hnn(power, parse(spec.base()));
      }
    }
    fail("unknown spec kind");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const GroupSpec& spec, const Element& x) {
  std::string out;
  print_into(out, spec, x);
  return out;
}

Element parse_element(const GroupSpec& spec, std::string_view text) {
  return ElementParser(text).parse_all(spec);
}

}  // namespace lacolor
