#pragma once

// Finite-window evidence for aperiodicity and limit aperiodicity:
//   aperiodicity_scan   every small b ≠ e moves the coloring somewhere in a window
//   la2_scan            minimal r with a witness c ∈ B_r(e), f(hc) ≠ f(hgc), for all tested h
//   ua_lambda_scan      minimal grid λ with a witness b ∈ B_{λ d_g(h)}(h), f(gb) ≠ f(b)
//   orbit_pattern_scan  no translated window pattern has a small window-period
// A scan that runs out of radius reports INCONCLUSIVE-AT-CAP, never a
// refutation.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacolor/colorings.hpp"
#include "lacolor/groups.hpp"
#include "lacolor/kernels.hpp"

namespace lacolor {

enum class Verdict { Pass, Fail, InconclusiveAtCap };
std::string to_string(Verdict v);

struct ScanCase {
  std::string subject;
  std::string outcome;
  std::optional<std::string> witness;
  std::optional<std::uint64_t> radius;
  std::optional<double> lambda;
};

/// Deterministic given (coloring provenance, parameters, seed); wall_time is
/// only filled in when timing was requested.
struct ScanReport {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<ScanCase> cases;
  Verdict verdict = Verdict::Pass;
  std::uint64_t seed = 0;
  std::optional<double> wall_time;

  nlohmann::ordered_json to_json() const;
  std::string dump(int indent = 2) const { return to_json().dump(indent); }
};

struct ScanOptions {
  std::size_t max_elements = kDefaultMaxElements;
  kernels::Policy policy;
  std::uint64_t seed = 0;
  bool timing = false;
};

/// (g∗f)(a) = f(g⁻¹a).
Coloring act(const Element& g, const Coloring& f);

/// First a in window order with f(b⁻¹a) ≠ f(a), or none if b is a period of
/// f on the window.
std::optional<Element> period_violation(const Coloring& f, const Element& b, const Ball& window);

ScanReport aperiodicity_scan(const Coloring& f, std::size_t b_radius, std::size_t window_radius,
                             const ScanOptions& options = {});

struct La2Result {
  std::optional<std::size_t> radius;  // minimal r, when every h has a witness
  std::optional<Element> offending_h;  // first h without a witness at the cap
  std::vector<std::int32_t> per_h;     // witness radius per h in ball order, -1 if none
};

/// Throws DomainError if g is the identity.
La2Result la2_scan(const Coloring& f, const Element& g, std::size_t h_radius,
                   std::size_t s_radius_cap, const ScanOptions& options = {});
ScanReport la2_report(const Coloring& f, const std::vector<Element>& gs, std::size_t h_radius,
                      std::size_t s_radius_cap, const ScanOptions& options = {});

struct UaOptions {
  double lambda_step = 0.5;
  double lambda_cap = 16.0;
  std::size_t witness_radius_cap = 512;
};

struct UaResult {
  std::optional<double> lambda;
  std::optional<Element> failing_g;
  std::optional<Element> failing_h;
  bool hit_witness_cap = false;
};

UaResult ua_lambda_scan(const Coloring& f, std::size_t g_radius, std::size_t h_radius,
                        const ScanOptions& options = {}, const UaOptions& ua = {});
ScanReport ua_report(const Coloring& f, std::size_t g_radius, std::size_t h_radius,
                     const ScanOptions& options = {}, const UaOptions& ua = {});

/// Restriction of shift∗f to a finite window.
struct Pattern {
  Element shift;
  std::vector<Color> colors;
};
Pattern pattern_of(const Coloring& f, const Element& shift, std::span<const Element> window);

ScanReport orbit_pattern_scan(const Coloring& f, const std::vector<Element>& schedule,
                              const std::vector<Element>& window, std::size_t b_radius,
                              const ScanOptions& options = {});

/// Number of distinct patterns of shift∗f on the window over the schedule.
std::size_t distinct_pattern_count(const Coloring& f, const std::vector<Element>& schedule,
                                   const std::vector<Element>& window,
                                   const kernels::Policy& policy = {});

/// Aperiodicity scan for a G-set coloring. b that fixes every window point
/// is treated as a member of Fix(X) and excluded.
template <class Point>
ScanReport aperiodicity_scan(const GSetColoring<Point>& f, std::size_t b_radius,
                             const std::vector<Point>& window, const ScanOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSpec& spec = f.group;
  const Ball bs = ball(spec, b_radius, options.max_elements);
  std::vector<Color> colors;
  colors.reserve(window.size());
  for (const auto& p : window) colors.push_back(f.color(p));

  struct Outcome {
    int state = 0;  // 0 witness, 1 fixes window, 2 period on window
    std::size_t witness = 0;
  };
  auto outcomes = kernels::map_indices(options.policy, bs.size() - 1, [&](std::size_t k) {
    const Element& b = bs.elements[k + 1];
    const Element b_inv = inverse(spec, b);
    bool fixes = true;
    for (std::size_t i = 0; i < window.size(); ++i) {
      const Point moved = f.act(b_inv, window[i]);
      if (fixes && f.key(moved) != f.key(window[i])) fixes = false;
      if (!(f.color(moved) == colors[i])) return Outcome{0, i};
    }
    return Outcome{fixes ? 1 : 2, 0};
  });

  ScanReport report;
  report.kind = "aperiodic-gset";
  report.params["coloring"] = f.provenance.to_string();
  report.params["spec"] = spec.to_string();
  report.params["b_radius"] = b_radius;
  report.params["window_points"] = window.size();
  report.params["max_elements"] = options.max_elements;
  report.seed = options.seed;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    ScanCase c{to_text(spec, bs.elements[k + 1]), {}, {}, {}, {}};
    switch (outcomes[k].state) {
      case 0:
        c.outcome = "witness";
        c.witness = "window[" + std::to_string(outcomes[k].witness) + "]";
        break;
      case 1:
        c.outcome = "fixes-window";
        break;
      default:
        c.outcome = "period-on-window";
        report.verdict = Verdict::Fail;
        break;
    }
    report.cases.push_back(std::move(c));
  }
  if (options.timing) {
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace lacolor
