#pragma once

// Barycentric subdivision of the Bass–Serre tree of a free product A⋆B,
// rooted at the barycenter of the edge [A, B].
//
// Vertices:
//   Barycenter(w)  midpoint of the edge [wA, wB]; norm 2|w|
//   CosetA(w)      the vertex wA; canonical w does not end in a Left letter
//   CosetB(w)      the vertex wB; canonical w does not end in a Right letter
// A canonical coset rep is the unique shortest word of the coset, and
// its norm is 2|w| + 1. |w| counts letters (syllables), not word length.

#include <cstdint>
#include <string>
#include <vector>

#include "lacolor/element.hpp"
#include "lacolor/group_spec.hpp"

namespace lacolor {

class TreeVertex {
 public:
  enum class Kind : std::uint8_t { Barycenter, CosetA, CosetB };

  static TreeVertex root();
  static TreeVertex barycenter(Element w);
  /// Canonicalizes by stripping a trailing Left letter.
  static TreeVertex coset_a(Element w);
  /// Canonicalizes by stripping a trailing Right letter.
  static TreeVertex coset_b(Element w);

  Kind kind() const noexcept { return kind_; }
  const Element& rep() const noexcept { return rep_; }
  bool is_barycenter() const noexcept { return kind_ == Kind::Barycenter; }

  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.kind_ == b.kind_ && a.rep_ == b.rep_;
  }

 private:
  TreeVertex(Kind kind, Element rep) : kind_(kind), rep_(std::move(rep)) {}
  Kind kind_;
  Element rep_;
};

std::string serialize(const TreeVertex& v);
std::string to_text(const GroupSpec& free_spec, const TreeVertex& v);

/// Distance to the root.
std::uint64_t tree_norm(const TreeVertex& v);

/// Unique neighbour one step closer to the root. Throws DomainError at the root.
TreeVertex pred(const TreeVertex& v);

/// Left multiplication g·v; an isometry of the tree.
TreeVertex act_on_tree(const GroupSpec& free_spec, const Element& g, const TreeVertex& v);

/// Tree adjacency, decided through pred (edges join v and pred(v)).
bool tree_adjacent(const TreeVertex& v, const TreeVertex& w);

/// Path length between two vertices via their deepest common ancestor.
std::uint64_t tree_distance(const TreeVertex& v, const TreeVertex& w);

}  // namespace lacolor
