#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "lacolor/errors.hpp"
#include "lacolor/groups.hpp"
#include "lacolor/spec_parser.hpp"
#include "test_support.hpp"

using namespace lacolor;
using lacolor::testing::random_element;
using lacolor::testing::reduce_concat;
using lacolor::testing::spec_families;

namespace {

Element L(std::int64_t v) { return Element::integer(v); }

Element word(const GroupSpec& spec, std::initializer_list<std::pair<char, std::int64_t>> ls) {
  std::vector<Letter> letters;
  for (auto [s, v] : ls) letters.push_back({s == 'L' ? Side::Left : Side::Right, L(v)});
  return free_word(spec, std::move(letters));
}

// hnn(Z, θ) product by rewriting the raw word t^i h t^j k: move every Z
// letter right past t^{±1} using x t = t θ(x), then collect.
Element hnn_rewrite(Automorphism a, const Element& x, const Element& y) {
  struct Sym {
    int t;  // +1, -1, or 0 for a Z letter
    std::int64_t v;
  };
  std::vector<Sym> w;
  auto push_t = [&](std::int64_t p) {
    for (std::int64_t i = 0; i < std::abs(p); ++i) w.push_back({p > 0 ? 1 : -1, 0});
  };
  push_t(x.power());
  w.push_back({0, x.base().value()});
  push_t(y.power());
  w.push_back({0, y.base().value()});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].t == 0 && w[i + 1].t != 0) {
        const std::int64_t moved = a == Automorphism::Inversion ? -w[i].v : w[i].v;
        w[i] = {w[i + 1].t, 0};
        w[i + 1] = {0, moved};
        changed = true;
      }
    }
  }
  std::int64_t power = 0, h = 0;
  for (const auto& s : w) {
    power += s.t;
    if (s.t == 0) h += s.v;
  }
  return Element::hnn(power, L(h));
}

// Norm by breadth-first search over symmetric generators.
std::map<std::string, std::uint64_t> bfs_norms(const GroupSpec& spec, std::uint64_t radius) {
  std::map<std::string, std::uint64_t> dist;
  std::queue<Element> q;
  const auto gens = generators(spec);
  dist[serialize(identity(spec))] = 0;
  q.push(identity(spec));
  while (!q.empty()) {
    Element g = q.front();
    q.pop();
    const std::uint64_t d = dist[serialize(g)];
    if (d == radius) continue;
    for (const auto& s : gens) {
      for (const Element& step : {s, inverse(spec, s)}) {
        Element h = multiply(spec, g, step);
        if (dist.emplace(serialize(h), d + 1).second) q.push(h);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("free product multiplication examples") {
  const GroupSpec f = parse_spec("free(Z,Z)");
  CHECK(multiply(f, word(f, {{'L', 1}, {'R', 1}}), word(f, {{'R', -1}, {'L', 3}})) ==
        word(f, {{'L', 4}}));
  CHECK(is_identity(f, multiply(f, word(f, {{'L', 2}}), word(f, {{'L', -2}}))));
  CHECK(word_norm(f, word(f, {{'L', 2}, {'R', 1}})) == 3);
  CHECK(ball(f, 2).size() == 17);
}

TEST_CASE("hnn multiplication examples") {
  const GroupSpec h = parse_spec("hnn(Z,inv)");
  CHECK(multiply(h, Element::hnn(1, L(2)), Element::hnn(1, L(3))) == Element::hnn(2, L(1)));
  CHECK(inverse(h, Element::hnn(1, L(2))) == Element::hnn(-1, L(2)));
  const GroupSpec id = parse_spec("hnn(Z,id)");
  CHECK(multiply(id, Element::hnn(1, L(2)), Element::hnn(1, L(3))) == Element::hnn(2, L(5)));
}

TEST_CASE("hnn product agrees with the rewriting oracle") {
  std::mt19937_64 rng(11);
  for (auto a : {Automorphism::Identity, Automorphism::Inversion}) {
    const GroupSpec spec = GroupSpec::hnn(GroupSpec::z(), a);
    for (int i = 0; i < 500; ++i) {
      const Element x = random_element(spec, rng, 7);
      const Element y = random_element(spec, rng, 7);
      REQUIRE(multiply(spec, x, y) == hnn_rewrite(a, x, y));
    }
  }
}

TEST_CASE("free product agrees with the brute-force reducer") {
  std::mt19937_64 rng(12);
  for (const char* text : {"free(Z,Z)", "free(prod(Z,Z),Z)", "free(free(Z,Z),Z)"}) {
    const GroupSpec spec = parse_spec(text);
    for (int i = 0; i < 500; ++i) {
      const Element x = random_element(spec, rng, 2);
      const Element y = random_element(spec, rng, 2);
      REQUIRE(multiply(spec, x, y) == reduce_concat(spec, x, y));
    }
  }
}

TEST_CASE("group axioms on every family") {
  std::mt19937_64 rng(13);
  for (const auto& spec : spec_families()) {
    CAPTURE(spec.to_string());
    const Element e = identity(spec);
    for (int i = 0; i < 300; ++i) {
      const Element x = random_element(spec, rng);
      const Element y = random_element(spec, rng);
      const Element z = random_element(spec, rng);
      REQUIRE(conforms(spec, x));
      REQUIRE(multiply(spec, multiply(spec, x, y), z) == multiply(spec, x, multiply(spec, y, z)));
      REQUIRE(multiply(spec, e, x) == x);
      REQUIRE(multiply(spec, x, e) == x);
      REQUIRE(is_identity(spec, multiply(spec, x, inverse(spec, x))));
      REQUIRE(is_identity(spec, multiply(spec, inverse(spec, x), x)));
    }
  }
}

TEST_CASE("word norm equals breadth-first distance") {
  for (const auto& spec : spec_families()) {
    CAPTURE(spec.to_string());
    const auto dist = bfs_norms(spec, 5);
    const Ball b = ball(spec, 5);
    REQUIRE(b.size() == dist.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      REQUIRE(dist.at(serialize(b.elements[i])) == b.norms[i]);
      REQUIRE(word_norm(spec, b.elements[i]) == b.norms[i]);
    }
  }
}

TEST_CASE("ball ordering, lookup and prefixes") {
  const GroupSpec spec = parse_spec("prod(Z,Z)");
  const Ball b = ball(spec, 4);
  CHECK(b.size() == 41);
  CHECK(b.prefix_size(0) == 1);
  CHECK(b.prefix_size(1) == 5);
  CHECK(b.prefix_size(4) == 41);
  for (std::size_t i = 1; i < b.size(); ++i) {
    REQUIRE(b.norms[i - 1] <= b.norms[i]);
    if (b.norms[i - 1] == b.norms[i]) {
      REQUIRE(serialize(b.elements[i - 1]) < serialize(b.elements[i]));
    }
    REQUIRE(b.find(b.elements[i]) == i);
  }
  CHECK_FALSE(b.find(Element::pair(L(5), L(0))).has_value());
  CHECK_THROWS_AS(ball(spec, 100, 1000), OverflowError);
}

TEST_CASE("ball growth") {
  const GroupSpec f = parse_spec("free(Z,Z)");
  const GroupSpec p = parse_spec("prod(Z,Z)");
  for (std::size_t r = 0; r <= 6; ++r) {
    std::size_t pow3 = 1;
    for (std::size_t i = 0; i < r; ++i) pow3 *= 3;
    CHECK(ball(f, r).size() == 2 * pow3 - 1);
  }
  for (std::size_t r = 0; r <= 8; ++r) CHECK(ball(p, r).size() == 2 * r * r + 2 * r + 1);
}

TEST_CASE("serialization is injective and order-compatible on integers") {
  CHECK(serialize(L(-1)) < serialize(L(0)));
  CHECK(serialize(L(0)) < serialize(L(1)));
  CHECK(serialize(L(INT64_MIN)) < serialize(L(-1)));
  CHECK(serialize(L(1)) < serialize(L(INT64_MAX)));
  for (const auto& spec : spec_families()) {
    const Ball b = ball(spec, 4);
    std::set<std::string> seen;
    for (const auto& g : b.elements) seen.insert(serialize(g));
    CHECK(seen.size() == b.size());
  }
  const GroupSpec f = parse_spec("free(Z,Z)");
  CHECK(serialize(word(f, {{'L', 1}})) != serialize(word(f, {{'R', 1}})));
}

TEST_CASE("structural errors") {
  const GroupSpec z = GroupSpec::z();
  const GroupSpec f = parse_spec("free(Z,Z)");
  CHECK_THROWS_AS(GroupSpec::hnn(f, Automorphism::Inversion), StructuralError);
  CHECK_THROWS_AS(multiply(z, L(1), Element::pair(L(0), L(0))), StructuralError);
  CHECK_THROWS_AS(free_word(f, {{Side::Left, L(1)}, {Side::Left, L(2)}}), StructuralError);
  CHECK_THROWS_AS(free_word(f, {{Side::Left, L(0)}}), StructuralError);
  CHECK_FALSE(conforms(f, L(3)));
  CHECK_THROWS_AS(check_conforms(z, Element::hnn(0, L(0))), StructuralError);
}

TEST_CASE("retractions are homomorphisms") {
  std::mt19937_64 rng(14);
  const GroupSpec f = parse_spec("free(Z,Z)");
  for (int i = 0; i < 300; ++i) {
    const Element x = random_element(f, rng);
    const Element y = random_element(f, rng);
    const Element xy = multiply(f, x, y);
    REQUIRE(pi_retract(f, xy) ==
            multiply(f.left(), pi_retract(f, x), pi_retract(f, y)));
    REQUIRE(theta_retract(f, xy) ==
            multiply(f.right(), theta_retract(f, x), theta_retract(f, y)));
  }
  CHECK(pi_retract(f, word(f, {{'L', 2}, {'R', 5}, {'L', -7}})) == L(-5));
  CHECK(theta_retract(f, word(f, {{'L', 2}, {'R', 5}, {'L', -7}})) == L(5));
}

TEST_CASE("hnn decomposition and automorphism powers") {
  const GroupSpec h = parse_spec("hnn(Z,inv)");
  const HnnParts parts = hnn_decompose(h, Element::hnn(0, L(5)));
  CHECK(parts.power == 0);
  CHECK(parts.base == L(5));
  CHECK(apply_automorphism(h, 3, L(4)) == L(-4));
  CHECK(apply_automorphism(h, -2, L(4)) == L(4));
  CHECK_THROWS_AS(hnn_decompose(parse_spec("Z"), L(1)), StructuralError);
}

TEST_CASE("element text round-trips") {
  std::mt19937_64 rng(15);
  for (const auto& spec : spec_families()) {
    CAPTURE(spec.to_string());
    for (int i = 0; i < 200; ++i) {
      const Element x = random_element(spec, rng);
      REQUIRE(parse_element(spec, to_text(spec, x)) == x);
    }
  }
  const GroupSpec f = parse_spec("free(Z,Z)");
  CHECK(to_text(f, identity(f)) == "e");
  CHECK(parse_element(f, "L1.R−2") == word(f, {{'L', 1}, {'R', -2}}));
  CHECK(parse_element(parse_spec("hnn(Z,inv)"), "t^2.h3") == Element::hnn(2, L(3)));
  CHECK_THROWS(parse_element(f, "L1.L2"));
  CHECK_THROWS(parse_element(GroupSpec::z(), "abc"));
}

TEST_CASE("displacement") {
  const GroupSpec z = GroupSpec::z();
  CHECK(displacement(z, L(3), L(10)) == 3);
  const GroupSpec f = parse_spec("free(Z,Z)");
  // h^{-1} g h for g = L1, h = R1 has norm 3.
  CHECK(displacement(f, word(f, {{'L', 1}}), word(f, {{'R', 1}})) == 3);
}

TEST_CASE("free sphere sizes and left-invariance of the metric") {
  const GroupSpec f = parse_spec("free(Z,Z)");
  const Ball b = ball(f, 6);
  std::size_t expected = 4;
  for (std::size_t k = 1; k <= 6; ++k, expected *= 3) {
    CHECK(b.prefix_size(k) - b.prefix_size(k - 1) == expected);
  }
  std::mt19937_64 rng(16);
  for (const auto& spec : spec_families()) {
    for (int i = 0; i < 200; ++i) {
      const Element g = random_element(spec, rng);
      const Element x = random_element(spec, rng);
      const Element y = random_element(spec, rng);
      const Element gx = multiply(spec, g, x), gy = multiply(spec, g, y);
      REQUIRE(word_norm(spec, multiply(spec, inverse(spec, x), y)) ==
              word_norm(spec, multiply(spec, inverse(spec, gx), gy)));
    }
  }
}
