#include "lacolor/bass_serre.hpp"

#include "lacolor/errors.hpp"
#include "lacolor/groups.hpp"

namespace lacolor {

namespace {

Element strip_trailing(Element w, Side side) {
  auto letters = w.letters();
  if (!letters.empty() && letters.back().side == side) letters.pop_back();
  return Element::word(std::move(letters));
}

}  // namespace

TreeVertex TreeVertex::root() { return TreeVertex(Kind::Barycenter, Element::word({})); }

TreeVertex TreeVertex::barycenter(Element w) {
  if (w.kind() != Element::Kind::Word) throw StructuralError("barycenter: not a word");
  return TreeVertex(Kind::Barycenter, std::move(w));
}

TreeVertex TreeVertex::coset_a(Element w) {
  if (w.kind() != Element::Kind::Word) throw StructuralError("coset_a: not a word");
  return TreeVertex(Kind::CosetA, strip_trailing(std::move(w), Side::Left));
}

TreeVertex TreeVertex::coset_b(Element w) {
  if (w.kind() != Element::Kind::Word) throw StructuralError("coset_b: not a word");
  return TreeVertex(Kind::CosetB, strip_trailing(std::move(w), Side::Right));
}

std::string serialize(const TreeVertex& v) {
  const char tag = v.kind() == TreeVertex::Kind::Barycenter ? 'X'
                   : v.kind() == TreeVertex::Kind::CosetA   ? 'A'
                                                            : 'B';
  return tag + serialize(v.rep());
}

std::string to_text(const GroupSpec& free_spec, const TreeVertex& v) {
  const std::string w = to_text(free_spec, v.rep());
  switch (v.kind()) {
    case TreeVertex::Kind::Barycenter:
      return "x[" + w + "]";
    case TreeVertex::Kind::CosetA:
      return w + "A";
    case TreeVertex::Kind::CosetB:
      return w + "B";
  }
  return {};
}

std::uint64_t tree_norm(const TreeVertex& v) {
  const std::uint64_t len = v.rep().letters().size();
  return v.is_barycenter() ? 2 * len : 2 * len + 1;
}

TreeVertex pred(const TreeVertex& v) {
  if (v.is_barycenter()) {
    const auto& letters = v.rep().letters();
    if (letters.empty()) throw DomainError("pred: the root has no predecessor");
    return letters.back().side == Side::Left ? TreeVertex::coset_a(v.rep())
                                             : TreeVertex::coset_b(v.rep());
  }
  return TreeVertex::barycenter(v.rep());
}

TreeVertex act_on_tree(const GroupSpec& free_spec, const Element& g, const TreeVertex& v) {
  Element gw = multiply(free_spec, g, v.rep());
  switch (v.kind()) {
    case TreeVertex::Kind::Barycenter:
      return TreeVertex::barycenter(std::move(gw));
    case TreeVertex::Kind::CosetA:
      return TreeVertex::coset_a(std::move(gw));
    case TreeVertex::Kind::CosetB:
      return TreeVertex::coset_b(std::move(gw));
  }
  return v;
}

bool tree_adjacent(const TreeVertex& v, const TreeVertex& w) {
  const auto nv = tree_norm(v);
  const auto nw = tree_norm(w);
  if (nv == nw + 1) return pred(v) == w;
  if (nw == nv + 1) return pred(w) == v;
  return false;
}

std::uint64_t tree_distance(const TreeVertex& v, const TreeVertex& w) {
  TreeVertex a = v;
  TreeVertex b = w;
  std::uint64_t steps = 0;
  while (tree_norm(a) > tree_norm(b)) {
    a = pred(a);
    ++steps;
  }
  while (tree_norm(b) > tree_norm(a)) {
    b = pred(b);
    ++steps;
  }
  while (!(a == b)) {
    a = pred(a);
    b = pred(b);
    steps += 2;
  }
  return steps;
}

}  // namespace lacolor
