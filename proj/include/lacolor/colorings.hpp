#pragma once

// Compilation of a GroupSpec into a finite-palette coloring by structural
// recursion:
//   Z      n        -> m(|n|)
//   prod   (g, h)   -> (f_right(h), f_left(g))          coset coloring first
//   hnn    t^i h    -> (m(|i|), f_base(h))
//   free   w        -> (F(x_w), F(pred x_w)), F the 4-tuple tree coloring
//                      (ν(‖x‖), ‖x‖ mod 3, f_A(π w) | α, f_B(θ w) | β)
// The product and hnn rules are the transitive-action composite
// f(g) = (φ(g·x₀), ψ(a⁻¹g)) for the coset space of a factor; they are
// written out directly here and compose_transitive() rebuilds them from an
// explicit decomposition oracle.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lacolor/bass_serre.hpp"
#include "lacolor/color.hpp"
#include "lacolor/element.hpp"
#include "lacolor/errors.hpp"
#include "lacolor/group_spec.hpp"
#include "lacolor/groups.hpp"

namespace lacolor {

/// Construction trace: which rule produced a coloring, for which spec, from
/// which sub-colorings.
struct Provenance {
  std::string rule;
  std::string spec;
  std::string note;
  std::vector<Provenance> children;

  /// rule[spec](child, ...)
  std::string to_string() const;
};

/// Pure map from group elements to colors with a declared palette.
/// Immutable and cheap to copy; eval is reentrant.
class Coloring {
 public:
  using Evaluator = std::function<Color(const Element&)>;

  Coloring(GroupSpec spec, Evaluator eval, Palette palette, Provenance provenance);

  Color operator()(const Element& g) const { return impl_->eval(g); }

  const GroupSpec& spec() const noexcept { return impl_->spec; }
  const Palette& palette() const noexcept { return impl_->palette; }
  const Provenance& provenance() const noexcept { return impl_->provenance; }

 private:
  struct Impl {
    GroupSpec spec;
    Evaluator eval;
    Palette palette;
    Provenance provenance;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Coloring of a G-set: the action, a point coloring, and a point key used
/// for equality (serialization).
template <class Point>
struct GSetColoring {
  GroupSpec group;
  std::function<Point(const Element&, const Point&)> act;
  std::function<Color(const Point&)> color;
  std::function<std::string(const Point&)> key;
  Palette palette;
  Provenance provenance;
};

/// g = representative · remainder with remainder in the stabilizer of the
/// base point; `stabilizer_element` is the remainder in the stabilizer's
/// own spec.
struct Decomposition {
  Element representative;
  Element remainder;
  Element stabilizer_element;
};
using DecompositionOracle = std::function<Decomposition(const Element&)>;

Coloring base_z_coloring();
Coloring constant_coloring(const GroupSpec& spec, const Color& color);
/// Wraps an arbitrary pure function; used for controls and tests.
Coloring make_coloring(const GroupSpec& spec, Coloring::Evaluator eval, Palette palette,
                       std::string rule);

Coloring product_coloring(const Coloring& left, const Coloring& right);
Coloring hnn_coloring(const Coloring& base, Automorphism automorphism);

/// Coset space prod(G,H)/G ≅ H, colored by the right factor's coloring.
GSetColoring<Element> product_coset_gset(const GroupSpec& prod_spec, const Coloring& right);
/// (g, h) = (e, h)·(g, e).
DecompositionOracle product_decomposition(const GroupSpec& prod_spec);

/// Coset space hnn/H = {t^i H} ≅ Z colored by t^i H -> m(|i|).
GSetColoring<std::int64_t> hnn_coset_gset(const GroupSpec& hnn_spec);
/// t^i h = (t^i)·h.
DecompositionOracle hnn_decomposition(const GroupSpec& hnn_spec);

/// The 4-tuple coloring of the subdivided Bass–Serre tree of A⋆B.
GSetColoring<TreeVertex> tree_coloring(const Coloring& col_a, const Coloring& col_b);
Color tree_color(const GroupSpec& free_spec, const Coloring& col_a, const Coloring& col_b,
                 const TreeVertex& v);

/// f'(x) = (F(x), F(pred x)) on the barycenters; RootSentinel at the root.
GSetColoring<TreeVertex> barycenter_coloring(const Coloring& col_a, const Coloring& col_b);
/// The same map pulled back along w -> x_w.
Coloring free_product_coloring(const Coloring& col_a, const Coloring& col_b);

Coloring compile(const GroupSpec& spec);

/// Distinct colors taken on ball(radius), sorted.
std::vector<Color> reachable_palette(const Coloring& f, std::size_t radius,
                                     std::size_t max_elements = kDefaultMaxElements);

/// f(g) = (φ(g·x₀), ψ(a⁻¹g)). The oracle is validated on ball(validate_radius)
/// at construction and on every evaluation; a representative·remainder that
/// does not reproduce g, or a remainder outside Stab(x₀), throws
/// ConstructionError.
template <class Point>
Coloring compose_transitive(const GSetColoring<Point>& phi, const Point& base_point,
                            const Coloring& psi, DecompositionOracle decomp,
                            std::size_t validate_radius = 2) {
  const GroupSpec spec = phi.group;
  const std::string base_key = phi.key(base_point);
  auto checked = [spec, phi, base_key, decomp](const Element& g) {
    Decomposition d = decomp(g);
    if (!(multiply(spec, d.representative, d.remainder) == g)) {
      throw ConstructionError("compose_transitive: representative * remainder != g for " +
                              to_text(spec, g));
    }
    return d;
  };
  for (const auto& g : ball(spec, validate_radius).elements) {
    Decomposition d = checked(g);
    if (phi.key(phi.act(d.remainder, base_point)) != base_key) {
      throw ConstructionError("compose_transitive: remainder not in the stabilizer for " +
                              to_text(spec, g));
    }
  }
  auto eval = [phi, base_point, psi, checked](const Element& g) {
    Decomposition d = checked(g);
    return Color::tuple({phi.color(phi.act(g, base_point)), psi(d.stabilizer_element)});
  };
  Provenance prov{"compose_transitive", spec.to_string(), {}, {phi.provenance, psi.provenance()}};
  return Coloring(spec, std::move(eval), Palette::product({phi.palette, psi.palette()}),
                  std::move(prov));
}

}  // namespace lacolor
