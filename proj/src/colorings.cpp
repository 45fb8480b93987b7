#include "lacolor/colorings.hpp"

#include <algorithm>
#include <set>

#include "lacolor/sequences.hpp"

namespace lacolor {

std::string Provenance::to_string() const {
  std::string out = rule + "[" + spec + "]";
  if (!children.empty()) {
    out += "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ", ";
      out += children[i].to_string();
    }
    out += ")";
  }
  return out;
}

Coloring::Coloring(GroupSpec spec, Evaluator eval, Palette palette, Provenance provenance)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(spec), std::move(eval), std::move(palette), std::move(provenance)})) {}

namespace {

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

Color morse_bit(std::int64_t i) { return Color::bit(thue_morse(magnitude(i))); }

Palette tree_palette(const Coloring& col_a, const Coloring& col_b) {
  return Palette::product({Palette::trits(), Palette::trits(),
                           Palette::extended(col_a.palette(), {Color::alpha()}),
                           Palette::extended(col_b.palette(), {Color::beta()})});
}

}  // namespace

Coloring base_z_coloring() {
  return Coloring(
      GroupSpec::z(), [](const Element& g) { return morse_bit(g.value()); }, Palette::bits(),
      Provenance{"thue_morse_abs", "Z", "n -> m(|n|)", {}});
}

Coloring constant_coloring(const GroupSpec& spec, const Color& color) {
  return Coloring(
      spec, [color](const Element&) { return color; }, Palette::atoms({color}),
      Provenance{"constant", spec.to_string(), color.to_string(), {}});
}

Coloring make_coloring(const GroupSpec& spec, Coloring::Evaluator eval, Palette palette,
                       std::string rule) {
  return Coloring(spec, std::move(eval), std::move(palette),
                  Provenance{std::move(rule), spec.to_string(), {}, {}});
}

Coloring product_coloring(const Coloring& left, const Coloring& right) {
  const GroupSpec spec = GroupSpec::prod(left.spec(), right.spec());
  auto eval = [left, right](const Element& g) {
    return Color::tuple({right(g.second()), left(g.first())});
  };
  return Coloring(spec, std::move(eval), Palette::product({right.palette(), left.palette()}),
                  Provenance{"product", spec.to_string(), "(f_right(h), f_left(g)) at (g,h)",
                             {left.provenance(), right.provenance()}});
}

Coloring hnn_coloring(const Coloring& base, Automorphism automorphism) {
  const GroupSpec spec = GroupSpec::hnn(base.spec(), automorphism);
  auto eval = [base](const Element& g) {
    return Color::tuple({morse_bit(g.power()), base(g.base())});
  };
  return Coloring(spec, std::move(eval), Palette::product({Palette::bits(), base.palette()}),
                  Provenance{"hnn", spec.to_string(), "(m(|i|), f_base(h)) at t^i h",
                             {base.provenance()}});
}

GSetColoring<Element> product_coset_gset(const GroupSpec& prod_spec, const Coloring& right) {
  const GroupSpec right_spec = prod_spec.right();
  return GSetColoring<Element>{
      prod_spec,
      [right_spec](const Element& g, const Element& y) {
        return multiply(right_spec, g.second(), y);
      },
      [right](const Element& y) { return right(y); },
      [](const Element& y) { return serialize(y); },
      right.palette(),
      Provenance{"coset_space", prod_spec.to_string(), "prod/left ~ right factor",
                 {right.provenance()}}};
}

DecompositionOracle product_decomposition(const GroupSpec& prod_spec) {
  const Element left_e = identity(prod_spec.left());
  const Element right_e = identity(prod_spec.right());
  return [left_e, right_e](const Element& g) {
    return Decomposition{Element::pair(left_e, g.second()), Element::pair(g.first(), right_e),
                         g.first()};
  };
}

GSetColoring<std::int64_t> hnn_coset_gset(const GroupSpec& hnn_spec) {
  // t^j k · t^i H = t^{j+i} θ^i(k) H = t^{j+i} H.
  return GSetColoring<std::int64_t>{
      hnn_spec,
      [](const Element& g, const std::int64_t& i) { return g.power() + i; },
      [](const std::int64_t& i) { return morse_bit(i); },
      [](const std::int64_t& i) { return std::to_string(i); },
      Palette::bits(),
      Provenance{"coset_space", hnn_spec.to_string(), "t^i H -> m(|i|)", {}}};
}

DecompositionOracle hnn_decomposition(const GroupSpec& hnn_spec) {
  const Element base_e = identity(hnn_spec.base());
  return [base_e](const Element& g) {
    return Decomposition{Element::hnn(g.power(), base_e), Element::hnn(0, g.base()), g.base()};
  };
}

Color tree_color(const GroupSpec& free_spec, const Coloring& col_a, const Coloring& col_b,
                 const TreeVertex& v) {
  const std::uint64_t n = tree_norm(v);
  std::vector<Color> items{Color::trit(squarefree_ternary(n)), Color::trit(static_cast<int>(n % 3))};
  if (v.is_barycenter()) {
    items.push_back(col_a(pi_retract(free_spec, v.rep())));
    items.push_back(col_b(theta_retract(free_spec, v.rep())));
  } else {
    items.push_back(Color::alpha());
    items.push_back(Color::beta());
  }
  return Color::tuple(std::move(items));
}

GSetColoring<TreeVertex> tree_coloring(const Coloring& col_a, const Coloring& col_b) {
  const GroupSpec spec = GroupSpec::free(col_a.spec(), col_b.spec());
  return GSetColoring<TreeVertex>{
      spec,
      [spec](const Element& g, const TreeVertex& v) { return act_on_tree(spec, g, v); },
      [spec, col_a, col_b](const TreeVertex& v) { return tree_color(spec, col_a, col_b, v); },
      [](const TreeVertex& v) { return serialize(v); },
      tree_palette(col_a, col_b),
      Provenance{"tree_coloring", spec.to_string(),
                 "(nu(|x|), |x| mod 3, f_A(pi x) | alpha, f_B(theta x) | beta)",
                 {col_a.provenance(), col_b.provenance()}}};
}

namespace {

constexpr const char* kPredNote =
    "second component F(pred x_w) is always a coset vertex: "
    "(nu(2|w|-1), (2|w|-1) mod 3, alpha, beta), determined by |w|";

Color barycenter_color(const GroupSpec& spec, const Coloring& col_a, const Coloring& col_b,
                       const TreeVertex& x) {
  Color here = tree_color(spec, col_a, col_b, x);
  Color below = tree_norm(x) == 0 ? Color::root() : tree_color(spec, col_a, col_b, pred(x));
  return Color::tuple({std::move(here), std::move(below)});
}

Palette barycenter_palette(const Coloring& col_a, const Coloring& col_b) {
  Palette t = tree_palette(col_a, col_b);
  return Palette::product({t, Palette::extended(t, {Color::root()})});
}

}  // namespace

GSetColoring<TreeVertex> barycenter_coloring(const Coloring& col_a, const Coloring& col_b) {
  const GroupSpec spec = GroupSpec::free(col_a.spec(), col_b.spec());
  GSetColoring<TreeVertex> tree = tree_coloring(col_a, col_b);
  return GSetColoring<TreeVertex>{
      spec,
      tree.act,
      [spec, col_a, col_b](const TreeVertex& x) { return barycenter_color(spec, col_a, col_b, x); },
      tree.key,
      barycenter_palette(col_a, col_b),
      Provenance{"barycenter_coloring", spec.to_string(), kPredNote, {tree.provenance}}};
}

Coloring free_product_coloring(const Coloring& col_a, const Coloring& col_b) {
  const GroupSpec spec = GroupSpec::free(col_a.spec(), col_b.spec());
  auto eval = [spec, col_a, col_b](const Element& w) {
    return barycenter_color(spec, col_a, col_b, TreeVertex::barycenter(w));
  };
  return Coloring(spec, std::move(eval), barycenter_palette(col_a, col_b),
                  Provenance{"free_product", spec.to_string(), kPredNote,
                             {tree_coloring(col_a, col_b).provenance}});
}

Coloring compile(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupSpec::Kind::Z:
      return base_z_coloring();
    case GroupSpec::Kind::Prod:
      return product_coloring(compile(spec.left()), compile(spec.right()));
    case GroupSpec::Kind::Free:
      return free_product_coloring(compile(spec.left()), compile(spec.right()));
    case GroupSpec::Kind::Hnn:
      if (spec.base().kind() != GroupSpec::Kind::Z) {
        throw StructuralError("compile: unsupported hnn base at " + spec.to_string());
      }
      return hnn_coloring(compile(spec.base()), spec.automorphism());
  }
  throw StructuralError("compile: unknown node");
}

std::vector<Color> reachable_palette(const Coloring& f, std::size_t radius,
                                     std::size_t max_elements) {
  std::set<Color> seen;
  for (const auto& g : ball(f.spec(), radius, max_elements).elements) seen.insert(f(g));
  return {seen.begin(), seen.end()};
}

}  // namespace lacolor
