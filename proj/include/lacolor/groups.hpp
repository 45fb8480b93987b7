#pragma once

// Group operations on normal forms, the word metric, and the retractions
// of a free product onto its factors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lacolor/element.hpp"
#include "lacolor/group_spec.hpp"

namespace lacolor {

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

Element identity(const GroupSpec& spec);
bool is_identity(const GroupSpec& spec, const Element& x);

/// True iff `x` has the variant shape required by `spec` and every free word
/// inside it is reduced (alternating sides, no identity letters).
bool conforms(const GroupSpec& spec, const Element& x);
/// Throws StructuralError with a description when conforms() is false.
void check_conforms(const GroupSpec& spec, const Element& x);

/// Builds a free-product word, rejecting identity letters and adjacent
/// letters from the same factor.
Element free_word(const GroupSpec& spec, std::vector<Letter> letters);

/// (t^i h)(t^j k) = t^{i+j} θ^j(h) k for hnn; junction reduction for free.
Element multiply(const GroupSpec& spec, const Element& x, const Element& y);
Element inverse(const GroupSpec& spec, const Element& x);

/// Symmetric generating set fixed for the word metric.
std::vector<Element> generators(const GroupSpec& spec);

/// ‖g‖ = d(g, e) for the generating set above. Every constructor in the
/// grammar is norm-additive (θ ∈ {id, inv} is an isometry of Z), so this is
/// a closed form; ball() enumerates the same values by BFS.
std::uint64_t word_norm(const GroupSpec& spec, const Element& g);

/// d_g(h) = d(gh, h) = ‖h⁻¹gh‖.
std::uint64_t displacement(const GroupSpec& spec, const Element& g, const Element& h);

/// Elements within distance `radius` of e, ordered by (norm, serialization).
struct Ball {
  GroupSpec spec;
  std::size_t radius = 0;
  std::vector<Element> elements;
  std::vector<std::uint32_t> norms;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> find(const Element& g) const;
  /// Number of elements with norm ≤ r (a prefix of `elements`).
  std::size_t prefix_size(std::size_t r) const;
};

/// Breadth-first enumeration with normal-form deduplication. Throws
/// OverflowError once more than `max_elements` elements are discovered.
Ball ball(const GroupSpec& spec, std::size_t radius,
          std::size_t max_elements = kDefaultMaxElements);

/// π: A⋆B → A, product of the Left letters in order.
Element pi_retract(const GroupSpec& free_spec, const Element& w);
/// θ: A⋆B → B, product of the Right letters in order.
Element theta_retract(const GroupSpec& free_spec, const Element& w);

struct HnnParts {
  std::int64_t power;
  Element base;
};
/// Unique (i, h) with g = t^i·h.
HnnParts hnn_decompose(const GroupSpec& hnn_spec, const Element& g);

/// θ^power applied to a base element.
Element apply_automorphism(const GroupSpec& hnn_spec, std::int64_t power, const Element& h);

/// Text syntax: Z `3`; prod `(3,-2)`; free `L1.R2.L-1` (identity `e`,
/// letters of free/hnn factors bracketed as `L[...]`); hnn `t^2.h3`.
std::string to_text(const GroupSpec& spec, const Element& x);
/// Inverse of to_text. Accepts U+2212 as a minus sign. Throws
/// StructuralError on malformed or non-reduced input.
Element parse_element(const GroupSpec& spec, std::string_view text);

}  // namespace lacolor
