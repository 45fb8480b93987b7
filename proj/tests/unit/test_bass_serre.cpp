#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "lacolor/bass_serre.hpp"
#include "lacolor/errors.hpp"
#include "lacolor/spec_parser.hpp"
#include "test_support.hpp"

using namespace lacolor;

namespace {

// Explicit tree on the vertices reachable from ball(spec, r): each group
// element w contributes the edges x[w] - wA and x[w] - wB.
struct ExplicitTree {
  std::map<std::string, TreeVertex> vertices;
  std::map<std::string, std::vector<std::string>> adj;

  void add_edge(const TreeVertex& a, const TreeVertex& b) {
    const auto ka = serialize(a), kb = serialize(b);
    vertices.emplace(ka, a);
    vertices.emplace(kb, b);
    auto& la = adj[ka];
    if (std::find(la.begin(), la.end(), kb) == la.end()) {
      la.push_back(kb);
      adj[kb].push_back(ka);
    }
  }

  std::map<std::string, std::uint64_t> distances_from(const TreeVertex& v) const {
    std::map<std::string, std::uint64_t> dist{{serialize(v), 0}};
    std::queue<std::string> q;
    q.push(serialize(v));
    while (!q.empty()) {
      const auto k = q.front();
      q.pop();
      auto it = adj.find(k);
      if (it == adj.end()) continue;
      for (const auto& n : it->second) {
        if (dist.emplace(n, dist[k] + 1).second) q.push(n);
      }
    }
    return dist;
  }
};

ExplicitTree build_tree(const GroupSpec& spec, std::size_t r) {
  ExplicitTree t;
  for (const auto& w : ball(spec, r).elements) {
    t.add_edge(TreeVertex::barycenter(w), TreeVertex::coset_a(w));
    t.add_edge(TreeVertex::barycenter(w), TreeVertex::coset_b(w));
  }
  return t;
}

}  // namespace

TEST_CASE("tree norm is the distance to the root") {
  for (const char* text : {"free(Z,Z)", "free(prod(Z,Z),Z)"}) {
    const GroupSpec spec = parse_spec(text);
    const ExplicitTree t = build_tree(spec, 5);
    const auto dist = t.distances_from(TreeVertex::root());
    REQUIRE(dist.size() == t.vertices.size());
    for (const auto& [k, v] : t.vertices) {
      REQUIRE(tree_norm(v) == dist.at(k));
      if (tree_norm(v) > 0) {
        const TreeVertex p = pred(v);
        REQUIRE(tree_norm(p) + 1 == tree_norm(v));
        REQUIRE(tree_adjacent(v, p));
        const auto& neighbours = t.adj.at(k);
        REQUIRE(std::find(neighbours.begin(), neighbours.end(), serialize(p)) != neighbours.end());
      }
    }
  }
}

TEST_CASE("tree distance matches the explicit tree") {
  const GroupSpec spec = parse_spec("free(Z,Z)");
  const ExplicitTree t = build_tree(spec, 4);
  std::mt19937_64 rng(21);
  std::vector<TreeVertex> all;
  for (const auto& [k, v] : t.vertices) all.push_back(v);
  for (int i = 0; i < 20; ++i) {
    const TreeVertex& v = all[rng() % all.size()];
    const auto dist = t.distances_from(v);
    for (const auto& [k, w] : t.vertices) REQUIRE(tree_distance(v, w) == dist.at(k));
  }
}

TEST_CASE("the action is by tree automorphisms") {
  const GroupSpec spec = parse_spec("free(Z,Z)");
  std::mt19937_64 rng(22);
  const ExplicitTree t = build_tree(spec, 3);
  for (int i = 0; i < 30; ++i) {
    const Element g = lacolor::testing::random_element(spec, rng, 3, 4);
    const Element h = lacolor::testing::random_element(spec, rng, 3, 4);
    for (const auto& [k, v] : t.vertices) {
      const TreeVertex gv = act_on_tree(spec, g, v);
      REQUIRE(act_on_tree(spec, multiply(spec, g, h), v) ==
              act_on_tree(spec, g, act_on_tree(spec, h, v)));
      REQUIRE(gv.kind() == v.kind());
      for (const auto& n : t.adj.at(k)) {
        REQUIRE(tree_adjacent(gv, act_on_tree(spec, g, t.vertices.at(n))));
      }
    }
  }
}

TEST_CASE("vertex canonicalization and text") {
  const GroupSpec spec = parse_spec("free(Z,Z)");
  const Element w = parse_element(spec, "L1.R2");
  CHECK(TreeVertex::coset_b(w) == TreeVertex::coset_b(parse_element(spec, "L1")));
  CHECK(TreeVertex::coset_a(w) == TreeVertex::coset_a(w));
  CHECK(tree_norm(TreeVertex::coset_a(w)) == 5);
  CHECK(tree_norm(TreeVertex::coset_b(w)) == 3);
  CHECK(tree_norm(TreeVertex::barycenter(w)) == 4);
  CHECK(to_text(spec, TreeVertex::barycenter(w)) == "x[L1.R2]");
  CHECK(to_text(spec, TreeVertex::coset_a(identity(spec))) == "eA");
  CHECK(pred(TreeVertex::barycenter(w)) == TreeVertex::coset_b(w));
  CHECK(pred(TreeVertex::coset_a(identity(spec))) == TreeVertex::root());
  CHECK_THROWS_AS(pred(TreeVertex::root()), DomainError);
  CHECK_THROWS_AS(TreeVertex::barycenter(Element::integer(1)), StructuralError);
  CHECK_FALSE(tree_adjacent(TreeVertex::root(), TreeVertex::root()));
}

TEST_CASE("adjacency is preserved in both directions on the radius-6 ball") {
  const GroupSpec spec = parse_spec("free(Z,Z)");
  std::vector<TreeVertex> vertices;
  for (const auto& [k, v] : build_tree(spec, 3).vertices) vertices.push_back(v);
  std::vector<TreeVertex> near;
  for (const auto& v : vertices) {
    if (tree_norm(v) <= 6) near.push_back(v);
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Element g = lacolor::testing::random_element(spec, rng, 4, 5);
    std::vector<TreeVertex> moved;
    for (const auto& v : near) moved.push_back(act_on_tree(spec, g, v));
    for (std::size_t a = 0; a < near.size(); ++a) {
      for (std::size_t b = a + 1; b < near.size(); ++b) {
        REQUIRE(tree_adjacent(near[a], near[b]) == tree_adjacent(moved[a], moved[b]));
      }
    }
  }
}
