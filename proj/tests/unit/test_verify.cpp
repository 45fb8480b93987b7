#include <doctest.h>

#include <cmath>

#include "lacolor/errors.hpp"
#include "lacolor/sequences.hpp"
#include "lacolor/spec_parser.hpp"
#include "lacolor/verify.hpp"

using namespace lacolor;

namespace {

Element Z(std::int64_t v) { return Element::integer(v); }

int m_abs(std::int64_t n) { return thue_morse(static_cast<std::uint64_t>(std::abs(n))); }

// Smallest |c| with m(|h+c|) != m(|h+g+c|), or -1 within the cap.
int la2_brute(std::int64_t g, std::int64_t h, int cap) {
  for (int r = 0; r <= cap; ++r) {
    for (std::int64_t c : {std::int64_t{-r}, std::int64_t{r}}) {
      if (m_abs(h + c) != m_abs(h + g + c)) return r;
    }
  }
  return -1;
}

ScanOptions serial() {
  ScanOptions o;
  o.policy.parallel = false;
  return o;
}

}  // namespace

TEST_CASE("act is a left action") {
  const GroupSpec spec = parse_spec("free(Z,Z)");
  const Coloring f = compile(spec);
  const Element g = parse_element(spec, "L1.R-1");
  const Element h = parse_element(spec, "R2");
  const Coloring left = act(g, act(h, f));
  const Coloring direct = act(multiply(spec, g, h), f);
  for (const auto& a : ball(spec, 3).elements) {
    REQUIRE(left(a) == direct(a));
    REQUIRE(act(g, f)(a) == f(multiply(spec, inverse(spec, g), a)));
  }
}

TEST_CASE("aperiodicity scan: compiled colorings pass, constants fail") {
  for (const char* text : {"Z", "prod(Z,Z)", "hnn(Z,inv)", "free(Z,Z)"}) {
    const GroupSpec spec = parse_spec(text);
    const ScanReport r = aperiodicity_scan(compile(spec), 3, 6);
    CAPTURE(text);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.cases.size() == ball(spec, 3).size() - 1);
    for (const auto& c : r.cases) {
      REQUIRE(c.outcome == "witness");
      const Element b = parse_element(spec, c.subject);
      const Element a = parse_element(spec, *c.witness);
      REQUIRE_FALSE(compile(spec)(multiply(spec, inverse(spec, b), a)) == compile(spec)(a));
    }
    const ScanReport bad = aperiodicity_scan(constant_coloring(spec, Color::bit(0)), 2, 3);
    CHECK(bad.verdict == Verdict::Fail);
  }
}

TEST_CASE("a periodic coloring of Z is caught at its period") {
  const GroupSpec z = GroupSpec::z();
  const Coloring parity = make_coloring(
      z, [](const Element& g) { return Color::bit(static_cast<int>(g.value() & 1)); },
      Palette::bits(), "parity");
  const ScanReport r = aperiodicity_scan(parity, 3, 10);
  CHECK(r.verdict == Verdict::Fail);
  for (const auto& c : r.cases) {
    const auto b = parse_element(z, c.subject).value();
    CHECK((c.outcome == "period-on-window") == (b % 2 == 0));
  }
  CHECK(period_violation(parity, Z(2), ball(z, 10)) == std::nullopt);
  CHECK(period_violation(parity, Z(1), ball(z, 10)).has_value());
}

TEST_CASE("la2 witness radii match brute force on Z") {
  const Coloring f = compile(GroupSpec::z());
  const Ball hs = ball(GroupSpec::z(), 300);
  for (std::int64_t g : {-7, -3, -1, 1, 2, 5, 12, 15}) {
    const La2Result r = la2_scan(f, Z(g), 300, 64);
    REQUIRE(r.per_h.size() == hs.size());
    int worst = 0;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const int expected = la2_brute(g, hs.elements[k].value(), 64);
      REQUIRE(r.per_h[k] == expected);
      worst = std::max(worst, expected);
    }
    REQUIRE(r.radius == static_cast<std::size_t>(worst));
  }
  CHECK_THROWS_AS(la2_scan(f, Z(0), 10, 10), DomainError);
}

TEST_CASE("la2 report marks missing witnesses as inconclusive") {
  const GroupSpec z = GroupSpec::z();
  const ScanReport r = la2_report(constant_coloring(z, Color::bit(1)), {Z(1)}, 5, 5);
  CHECK(r.verdict == Verdict::InconclusiveAtCap);
  CHECK(r.cases.at(0).outcome == "no-witness-at-cap");
  const ScanReport ok = la2_report(compile(z), {Z(1), Z(-3)}, 50, 16);
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(ok.cases.at(0).radius == 1u);
}

TEST_CASE("ua lambda on Z: brute-force grid value and the la2 bridge") {
  const GroupSpec z = GroupSpec::z();
  const Coloring f = compile(z);
  const UaOptions ua{0.5, 16.0, 512};
  const UaResult r = ua_lambda_scan(f, 4, 40, serial(), ua);
  REQUIRE(r.lambda.has_value());

  // Independent grid search: smallest k·0.5 such that every (g, h) has a
  // witness c with |c| <= k·0.5·|g|.
  int k_needed = 1;
  for (std::int64_t g = -4; g <= 4; ++g) {
    if (g == 0) continue;
    for (std::int64_t h = -40; h <= 40; ++h) {
      int rho = -1;
      for (int c = 0; rho < 0 && c <= 64 * std::abs(static_cast<int>(g)); ++c) {
        if (m_abs(g + h + c) != m_abs(h + c) || m_abs(g + h - c) != m_abs(h - c)) rho = c;
      }
      REQUIRE(rho >= 0);
      const int k = std::max(1, static_cast<int>(std::ceil(rho / (0.5 * std::abs(g)) - 1e-9)));
      k_needed = std::max(k_needed, k);
    }
  }
  CHECK(*r.lambda == doctest::Approx(0.5 * k_needed));

  for (std::int64_t g = -4; g <= 4; ++g) {
    if (g == 0) continue;
    const La2Result l = la2_scan(f, Z(g), 40, 64);
    REQUIRE(l.radius.has_value());
    CHECK(*l.radius <= static_cast<std::size_t>(std::ceil(*r.lambda * std::abs(g))));
  }
}

TEST_CASE("ua report on a constant coloring is inconclusive") {
  const GroupSpec z = GroupSpec::z();
  const ScanReport r = ua_report(constant_coloring(z, Color::bit(0)), 1, 2, {}, {0.5, 2.0, 8});
  CHECK(r.verdict == Verdict::InconclusiveAtCap);
  CHECK_FALSE(r.params.contains("lambda"));
  const ScanReport ok = ua_report(compile(z), 2, 10);
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(ok.params.contains("lambda"));
}

TEST_CASE("orbit pattern scan") {
  const GroupSpec z = GroupSpec::z();
  std::vector<Element> window, schedule;
  for (int i = 0; i < 8; ++i) window.push_back(Z(i));
  for (int s = 0; s < 200; ++s) schedule.push_back(Z(-s));
  const Coloring f = compile(z);
  const ScanReport r = orbit_pattern_scan(f, schedule, window, 2);
  CHECK(r.params["distinct_patterns"] == distinct_pattern_count(f, schedule, window));
  // Factors of length 8 in Thue–Morse are never of period 1 or 2.
  CHECK(r.verdict == Verdict::Pass);
  const Coloring c = constant_coloring(z, Color::bit(0));
  CHECK(orbit_pattern_scan(c, schedule, window, 2).verdict == Verdict::Fail);
  CHECK(distinct_pattern_count(c, schedule, window) == 1);
  const Pattern p = pattern_of(f, Z(-3), window);
  for (int i = 0; i < 8; ++i) CHECK(p.colors[static_cast<std::size_t>(i)] == f(Z(i + 3)));
}

TEST_CASE("orbit scan over shifts 0..512 on the window [-64,64]") {
  const GroupSpec z = GroupSpec::z();
  std::vector<Element> window, schedule;
  for (int i = -64; i <= 64; ++i) window.push_back(Z(i));
  for (int s = 0; s <= 512; ++s) schedule.push_back(Z(s));
  CHECK(orbit_pattern_scan(compile(z), schedule, window, 8).verdict == Verdict::Pass);
  const Coloring parity = make_coloring(
      z, [](const Element& g) { return Color::bit(static_cast<int>(g.value() & 1)); },
      Palette::bits(), "parity");
  const ScanReport r = orbit_pattern_scan(parity, schedule, window, 8);
  CHECK(r.verdict == Verdict::Fail);
  for (const auto& c : r.cases) CHECK(c.outcome == "period");
}

TEST_CASE("G-set aperiodicity scans") {
  const GroupSpec h = parse_spec("hnn(Z,inv)");
  std::vector<std::int64_t> window;
  for (std::int64_t i = -10; i <= 10; ++i) window.push_back(i);
  const ScanReport r = aperiodicity_scan(hnn_coset_gset(h), 2, window);
  CHECK(r.verdict == Verdict::Pass);
  std::size_t fixes = 0;
  for (const auto& c : r.cases) fixes += c.outcome == "fixes-window";
  CHECK(fixes == 4);  // powerless b = ±1, ±2 act trivially on cosets

  const GroupSpec f = parse_spec("free(Z,Z)");
  const Coloring z = compile(GroupSpec::z());
  const auto tc = tree_coloring(z, z);
  std::vector<TreeVertex> vertices;
  for (const auto& w : ball(f, 4).elements) vertices.push_back(TreeVertex::barycenter(w));
  CHECK(aperiodicity_scan(tc, 3, vertices).verdict == Verdict::Pass);
}

TEST_CASE("reports serialize deterministically") {
  const Coloring f = compile(parse_spec("free(Z,Z)"));
  ScanOptions timed;
  timed.timing = true;
  timed.seed = 9;
  const ScanReport a = aperiodicity_scan(f, 2, 3);
  const ScanReport b = aperiodicity_scan(f, 2, 3);
  CHECK(a.dump() == b.dump());
  CHECK(a.to_json()["wall_time"].is_null());
  const auto j = aperiodicity_scan(f, 2, 3, timed).to_json();
  CHECK(j["wall_time"].is_number());
  CHECK(j["seed"] == 9);
  CHECK(j["verdict"] == "PASS");
  CHECK(to_string(Verdict::InconclusiveAtCap) == "INCONCLUSIVE-AT-CAP");
}

TEST_CASE("scans respect the element cap") {
  ScanOptions tight;
  tight.max_elements = 100;
  CHECK_THROWS_AS(aperiodicity_scan(compile(parse_spec("free(Z,Z)")), 2, 8, tight), OverflowError);
}
