#include "lacolor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace lacolor {

namespace {

using Clock = std::chrono::steady_clock;

void stamp(ScanReport& report, const ScanOptions& options, Clock::time_point start) {
  report.seed = options.seed;
  if (options.timing) {
    report.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  }
}

std::vector<Color> colors_on(const Coloring& f, const std::vector<Element>& points,
                             const kernels::Policy& policy) {
  return kernels::map_indices(policy, points.size(),
                              [&](std::size_t i) { return f(points[i]); });
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::InconclusiveAtCap:
      return "INCONCLUSIVE-AT-CAP";
  }
  return {};
}

nlohmann::ordered_json ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["params"] = params;
  auto cases_json = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json cj;
    cj["subject"] = c.subject;
    cj["outcome"] = c.outcome;
    if (c.witness) cj["witness"] = *c.witness;
    if (c.radius) cj["radius"] = *c.radius;
    if (c.lambda) cj["lambda"] = *c.lambda;
    cases_json.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases_json);
  j["verdict"] = to_string(verdict);
  j["seed"] = seed;
  j["wall_time"] = wall_time ? nlohmann::ordered_json(*wall_time) : nlohmann::ordered_json(nullptr);
  return j;
}

Coloring act(const Element& g, const Coloring& f) {
  const GroupSpec spec = f.spec();
  const Element g_inv = inverse(spec, g);
  auto eval = [spec, g_inv, f](const Element& a) { return f(multiply(spec, g_inv, a)); };
  Provenance prov{"act", spec.to_string(), to_text(spec, g), {f.provenance()}};
  return Coloring(spec, std::move(eval), f.palette(), std::move(prov));
}

std::optional<Element> period_violation(const Coloring& f, const Element& b, const Ball& window) {
  const Element b_inv = inverse(f.spec(), b);
  for (const auto& a : window.elements) {
    if (!(f(multiply(f.spec(), b_inv, a)) == f(a))) return a;
  }
  return std::nullopt;
}

ScanReport aperiodicity_scan(const Coloring& f, std::size_t b_radius, std::size_t window_radius,
                             const ScanOptions& options) {
  const auto start = Clock::now();
  const GroupSpec& spec = f.spec();
  const Ball window = ball(spec, window_radius, options.max_elements);
  const Ball bs = ball(spec, b_radius, options.max_elements);
  const std::vector<Color> colors = colors_on(f, window.elements, options.policy);

  // Witness index into the window, or -1 when b is a period on the window.
  auto witnesses = kernels::map_indices(options.policy, bs.size() - 1, [&](std::size_t k) {
    const Element b_inv = inverse(spec, bs.elements[k + 1]);
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (!(f(multiply(spec, b_inv, window.elements[i])) == colors[i])) {
        return static_cast<std::int64_t>(i);
      }
    }
    return std::int64_t{-1};
  });

  ScanReport report;
  report.kind = "aperiodic";
  report.params["coloring"] = f.provenance().to_string();
  report.params["spec"] = spec.to_string();
  report.params["b_radius"] = b_radius;
  report.params["window_radius"] = window_radius;
  report.params["window_size"] = window.size();
  report.params["max_elements"] = options.max_elements;
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    ScanCase c{to_text(spec, bs.elements[k + 1]), {}, {}, {}, {}};
    if (witnesses[k] >= 0) {
      c.outcome = "witness";
      c.witness = to_text(spec, window.elements[static_cast<std::size_t>(witnesses[k])]);
    } else {
      c.outcome = "period-on-window";
      report.verdict = Verdict::Fail;
    }
    report.cases.push_back(std::move(c));
  }
  stamp(report, options, start);
  return report;
}

La2Result la2_scan(const Coloring& f, const Element& g, std::size_t h_radius,
                   std::size_t s_radius_cap, const ScanOptions& options) {
  const GroupSpec& spec = f.spec();
  if (is_identity(spec, g)) throw DomainError("la2_scan: g must not be the identity");
  const Ball hs = ball(spec, h_radius, options.max_elements);
  const Ball cs = ball(spec, s_radius_cap, options.max_elements);

  La2Result result;
  result.per_h = kernels::map_indices(options.policy, hs.size(), [&](std::size_t k) {
    const Element& h = hs.elements[k];
    const Element hg = multiply(spec, h, g);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Element& c = cs.elements[i];
      if (!(f(multiply(spec, h, c)) == f(multiply(spec, hg, c)))) {
        return static_cast<std::int32_t>(cs.norms[i]);
      }
    }
    return std::int32_t{-1};
  });

  std::int32_t worst = 0;
  for (std::size_t k = 0; k < result.per_h.size(); ++k) {
    if (result.per_h[k] < 0) {
      result.offending_h = hs.elements[k];
      return result;
    }
    worst = std::max(worst, result.per_h[k]);
  }
  result.radius = static_cast<std::size_t>(worst);
  return result;
}

ScanReport la2_report(const Coloring& f, const std::vector<Element>& gs, std::size_t h_radius,
                      std::size_t s_radius_cap, const ScanOptions& options) {
  const auto start = Clock::now();
  const GroupSpec& spec = f.spec();
  ScanReport report;
  report.kind = "la2";
  report.params["coloring"] = f.provenance().to_string();
  report.params["spec"] = spec.to_string();
  report.params["h_radius"] = h_radius;
  report.params["s_radius_cap"] = s_radius_cap;
  report.params["max_elements"] = options.max_elements;
  for (const auto& g : gs) {
    const La2Result r = la2_scan(f, g, h_radius, s_radius_cap, options);
    ScanCase c{to_text(spec, g), {}, {}, {}, {}};
    if (r.radius) {
      c.outcome = "radius";
      c.radius = *r.radius;
    } else {
      c.outcome = "no-witness-at-cap";
      c.witness = to_text(spec, *r.offending_h);
      report.verdict = Verdict::InconclusiveAtCap;
    }
    report.cases.push_back(std::move(c));
  }
  stamp(report, options, start);
  return report;
}

namespace {

struct UaPair {
  std::int64_t steps = 0;  // grid index k (λ = k·step), or -1 on failure
  bool at_witness_cap = false;
};

struct UaSweep {
  std::vector<Element> gs;
  Ball hs;
  std::vector<UaPair> pairs;  // row-major (g, h)
};

UaSweep ua_sweep(const Coloring& f, std::size_t g_radius, std::size_t h_radius,
                 const ScanOptions& options, const UaOptions& ua) {
  const GroupSpec& spec = f.spec();
  Ball g_ball = ball(spec, g_radius, options.max_elements);
  UaSweep sweep{{g_ball.elements.begin() + 1, g_ball.elements.end()},
                ball(spec, h_radius, options.max_elements),
                {}};
  const std::size_t n_h = sweep.hs.size();
  const std::size_t n_pairs = sweep.gs.size() * n_h;

  auto displacements = kernels::map_indices(options.policy, n_pairs, [&](std::size_t p) {
    return displacement(spec, sweep.gs[p / n_h], sweep.hs.elements[p % n_h]);
  });
  const std::uint64_t d_max =
      displacements.empty() ? 0 : *std::max_element(displacements.begin(), displacements.end());
  const auto grid_radius = [&](std::uint64_t d) {
    return static_cast<std::size_t>(std::floor(ua.lambda_cap * static_cast<double>(d)));
  };
  const std::size_t c_radius = std::min(grid_radius(d_max), ua.witness_radius_cap);
  const Ball cs = ball(spec, c_radius, options.max_elements);

  sweep.pairs = kernels::map_indices(options.policy, n_pairs, [&](std::size_t p) {
    const Element& g = sweep.gs[p / n_h];
    const Element& h = sweep.hs.elements[p % n_h];
    const std::uint64_t d = displacements[p];
    const std::size_t wanted = grid_radius(d);
    const std::size_t limit = cs.prefix_size(std::min(wanted, c_radius));
    const Element gh = multiply(spec, g, h);
    for (std::size_t i = 0; i < limit; ++i) {
      const Element& c = cs.elements[i];
      if (!(f(multiply(spec, gh, c)) == f(multiply(spec, h, c)))) {
        const double ratio = static_cast<double>(cs.norms[i]) /
                             (ua.lambda_step * static_cast<double>(d));
        const auto k = static_cast<std::int64_t>(std::ceil(ratio - 1e-9));
        return UaPair{std::max<std::int64_t>(1, k), false};
      }
    }
    return UaPair{-1, wanted > c_radius};
  });
  return sweep;
}

}  // namespace

UaResult ua_lambda_scan(const Coloring& f, std::size_t g_radius, std::size_t h_radius,
                        const ScanOptions& options, const UaOptions& ua) {
  const UaSweep sweep = ua_sweep(f, g_radius, h_radius, options, ua);
  const std::size_t n_h = sweep.hs.size();
  UaResult result;
  std::int64_t worst = 1;
  for (std::size_t p = 0; p < sweep.pairs.size(); ++p) {
    if (sweep.pairs[p].steps < 0) {
      result.failing_g = sweep.gs[p / n_h];
      result.failing_h = sweep.hs.elements[p % n_h];
      result.hit_witness_cap = sweep.pairs[p].at_witness_cap;
      return result;
    }
    worst = std::max(worst, sweep.pairs[p].steps);
  }
  result.lambda = static_cast<double>(worst) * ua.lambda_step;
  return result;
}

ScanReport ua_report(const Coloring& f, std::size_t g_radius, std::size_t h_radius,
                     const ScanOptions& options, const UaOptions& ua) {
  const auto start = Clock::now();
  const GroupSpec& spec = f.spec();
  const UaSweep sweep = ua_sweep(f, g_radius, h_radius, options, ua);
  const std::size_t n_h = sweep.hs.size();

  ScanReport report;
  report.kind = "ua";
  report.params["coloring"] = f.provenance().to_string();
  report.params["spec"] = spec.to_string();
  report.params["g_radius"] = g_radius;
  report.params["h_radius"] = h_radius;
  report.params["lambda_step"] = ua.lambda_step;
  report.params["lambda_cap"] = ua.lambda_cap;
  report.params["witness_radius_cap"] = ua.witness_radius_cap;
  report.params["max_elements"] = options.max_elements;

  std::int64_t overall = 1;
  for (std::size_t gi = 0; gi < sweep.gs.size(); ++gi) {
    ScanCase c{to_text(spec, sweep.gs[gi]), {}, {}, {}, {}};
    std::int64_t worst = 1;
    for (std::size_t hi = 0; hi < n_h; ++hi) {
      const UaPair& pair = sweep.pairs[gi * n_h + hi];
      if (pair.steps < 0) {
        c.outcome = pair.at_witness_cap ? "no-witness-at-cap" : "no-witness-in-grid";
        c.witness = to_text(spec, sweep.hs.elements[hi]);
        worst = -1;
        break;
      }
      worst = std::max(worst, pair.steps);
    }
    if (worst < 0) {
      report.verdict = Verdict::InconclusiveAtCap;
    } else {
      c.outcome = "lambda";
      c.lambda = static_cast<double>(worst) * ua.lambda_step;
      overall = std::max(overall, worst);
    }
    report.cases.push_back(std::move(c));
  }
  if (report.verdict == Verdict::Pass) {
    report.params["lambda"] = static_cast<double>(overall) * ua.lambda_step;
  }
  stamp(report, options, start);
  return report;
}

Pattern pattern_of(const Coloring& f, const Element& shift, std::span<const Element> window) {
  const Element inv = inverse(f.spec(), shift);
  Pattern p{shift, {}};
  p.colors.reserve(window.size());
  for (const auto& a : window) p.colors.push_back(f(multiply(f.spec(), inv, a)));
  return p;
}

namespace {

std::vector<Pattern> patterns_for(const Coloring& f, const std::vector<Element>& schedule,
                                  const std::vector<Element>& window,
                                  const kernels::Policy& policy) {
  return kernels::map_indices(policy, schedule.size(), [&](std::size_t k) {
    return pattern_of(f, schedule[k], window);
  });
}

// Indices of the first occurrence of each distinct pattern, in schedule order.
std::vector<std::size_t> distinct_indices(const std::vector<Pattern>& patterns) {
  std::map<std::vector<Color>, std::size_t> seen;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (seen.emplace(patterns[k].colors, k).second) out.push_back(k);
  }
  return out;
}

}  // namespace

std::size_t distinct_pattern_count(const Coloring& f, const std::vector<Element>& schedule,
                                   const std::vector<Element>& window,
                                   const kernels::Policy& policy) {
  return distinct_indices(patterns_for(f, schedule, window, policy)).size();
}

ScanReport orbit_pattern_scan(const Coloring& f, const std::vector<Element>& schedule,
                              const std::vector<Element>& window, std::size_t b_radius,
                              const ScanOptions& options) {
  const auto start = Clock::now();
  const GroupSpec& spec = f.spec();
  const auto patterns = patterns_for(f, schedule, window, options.policy);
  const auto distinct = distinct_indices(patterns);

  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < window.size(); ++i) position.emplace(serialize(window[i]), i);

  // For each b ≠ e: pairs (i, j) with window[j] = b⁻¹·window[i].
  const Ball bs = ball(spec, b_radius, options.max_elements);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(bs.size() - 1);
  for (std::size_t k = 0; k + 1 < bs.size(); ++k) {
    const Element b_inv = inverse(spec, bs.elements[k + 1]);
    for (std::size_t i = 0; i < window.size(); ++i) {
      auto it = position.find(serialize(multiply(spec, b_inv, window[i])));
      if (it != position.end()) pairs[k].emplace_back(i, it->second);
    }
  }

  auto periods = kernels::map_indices(options.policy, distinct.size(), [&](std::size_t d) {
    const auto& colors = patterns[distinct[d]].colors;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k].empty()) continue;
      const bool periodic = std::all_of(pairs[k].begin(), pairs[k].end(), [&](const auto& ij) {
        return colors[ij.first] == colors[ij.second];
      });
      if (periodic) return static_cast<std::int64_t>(k);
    }
    return std::int64_t{-1};
  });

  ScanReport report;
  report.kind = "orbit";
  report.params["coloring"] = f.provenance().to_string();
  report.params["spec"] = spec.to_string();
  report.params["schedule_size"] = schedule.size();
  report.params["window_size"] = window.size();
  report.params["b_radius"] = b_radius;
  report.params["distinct_patterns"] = distinct.size();
  report.params["max_elements"] = options.max_elements;
  for (std::size_t d = 0; d < distinct.size(); ++d) {
    ScanCase c{"shift " + to_text(spec, schedule[distinct[d]]), {}, {}, {}, {}};
    if (periods[d] < 0) {
      c.outcome = "aperiodic-on-window";
    } else {
      c.outcome = "period";
      c.witness = to_text(spec, bs.elements[static_cast<std::size_t>(periods[d]) + 1]);
      report.verdict = Verdict::Fail;
    }
    report.cases.push_back(std::move(c));
  }
  stamp(report, options, start);
  return report;
}

}  // namespace lacolor
