// lacolor: build limit-aperiodic colorings and scan them on finite windows.
//
// Exit codes: 0 PASS, 1 FAIL, 2 INCONCLUSIVE-AT-CAP, 3 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lacolor/colorings.hpp"
#include "lacolor/counterexample.hpp"
#include "lacolor/errors.hpp"
#include "lacolor/render.hpp"
#include "lacolor/sequences.hpp"
#include "lacolor/spec_parser.hpp"
#include "lacolor/verify.hpp"

namespace {

using namespace lacolor;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Common {
  std::string spec_text = "Z";
  std::string output;
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t max_elements = kDefaultMaxElements;
  bool serial = false;
  bool timing = false;

  ScanOptions scan_options() const {
    ScanOptions o;
    o.max_elements = max_elements;
    o.policy = {!serial, threads};
    o.seed = seed;
    o.timing = timing;
    return o;
  }
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return kExitPass;
    case Verdict::Fail:
      return kExitFail;
    case Verdict::InconclusiveAtCap:
      return kExitInconclusive;
  }
  return kExitUsage;
}

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + common.output);
  out << text;
}

int emit_report(const Common& common, const ScanReport& report) {
  emit(common, report.dump(2) + "\n");
  std::cerr << report.kind << ": " << to_string(report.verdict) << "\n";
  return exit_code(report.verdict);
}

std::vector<Element> random_schedule(const GroupSpec& spec, std::size_t count,
                                     std::size_t word_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto gens = generators(spec);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Element g = identity(spec);
    for (std::size_t i = 0; i < word_length; ++i) g = multiply(spec, g, gens[rng() % gens.size()]);
    out.push_back(std::move(g));
  }
  return out;
}

void add_common(CLI::App* cmd, Common& common, bool with_spec) {
  if (with_spec) cmd->add_option("--spec", common.spec_text, "Group expression")->required();
  cmd->add_option("-o,--output", common.output, "Write output to a file instead of stdout");
  cmd->add_option("--seed", common.seed, "Seed for all randomness")->capture_default_str();
  cmd->add_option("--threads", common.threads, "Worker cap (0: OpenMP default)");
  cmd->add_option("--max-elements", common.max_elements, "Ball enumeration cap")
      ->capture_default_str();
  cmd->add_flag("--serial", common.serial, "Use the serial reference kernels");
  cmd->add_flag("--timing", common.timing, "Record wall time in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit-aperiodic colorings of groups built from Z"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "Parse a group expression and print it back");
  add_common(parse_cmd, common, true);
  parse_cmd->callback([&] {
    action = [&] {
      emit(common, print_spec(parse_spec(common.spec_text)) + "\n");
      return kExitPass;
    };
  });

  // color
  std::size_t color_radius = 4;
  auto* color_cmd = app.add_subcommand("color", "Dump the compiled coloring on a ball");
  add_common(color_cmd, common, true);
  color_cmd->add_option("--radius", color_radius, "Ball radius")->capture_default_str();
  color_cmd->callback([&] {
    action = [&] {
      const GroupSpec spec = parse_spec(common.spec_text);
      const Coloring f = compile(spec);
      std::ostringstream out;
      for (const auto& g : ball(spec, color_radius, common.max_elements).elements) {
        out << to_text(spec, g) << '\t' << f(g).to_string() << '\n';
      }
      emit(common, out.str());
      return kExitPass;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a finite-window scan");
  verify_cmd->require_subcommand(1);

  std::size_t ap_b_radius = 4, ap_window = 8;
  auto* ap_cmd = verify_cmd->add_subcommand("aperiodic", "Every small b != e moves the coloring");
  add_common(ap_cmd, common, true);
  ap_cmd->add_option("--b-radius", ap_b_radius)->capture_default_str();
  ap_cmd->add_option("--window", ap_window, "Window ball radius")->capture_default_str();
  ap_cmd->callback([&] {
    action = [&] {
      const Coloring f = compile(parse_spec(common.spec_text));
      return emit_report(common,
                         aperiodicity_scan(f, ap_b_radius, ap_window, common.scan_options()));
    };
  });

  std::vector<std::string> la2_gs;
  std::size_t la2_g_radius = 1, la2_h_radius = 16, la2_cap = 16;
  auto* la2_cmd = verify_cmd->add_subcommand("la2", "Minimal LA2 witness radius per g");
  add_common(la2_cmd, common, true);
  la2_cmd->add_option("--g", la2_gs, "Element to test (repeatable); default: ball(--g-radius)");
  la2_cmd->add_option("--g-radius", la2_g_radius)->capture_default_str();
  la2_cmd->add_option("--h-radius", la2_h_radius)->capture_default_str();
  la2_cmd->add_option("--s-cap", la2_cap, "Witness radius cap")->capture_default_str();
  la2_cmd->callback([&] {
    action = [&] {
      const GroupSpec spec = parse_spec(common.spec_text);
      const Coloring f = compile(spec);
      std::vector<Element> gs;
      if (la2_gs.empty()) {
        const Ball b = ball(spec, la2_g_radius, common.max_elements);
        gs.assign(b.elements.begin() + 1, b.elements.end());
      } else {
        for (const auto& text : la2_gs) gs.push_back(parse_element(spec, text));
      }
      return emit_report(common, la2_report(f, gs, la2_h_radius, la2_cap, common.scan_options()));
    };
  });

  std::size_t ua_g_radius = 2, ua_h_radius = 8;
  UaOptions ua_options;
  auto* ua_cmd = verify_cmd->add_subcommand("ua", "Minimal grid lambda for uniform aperiodicity");
  add_common(ua_cmd, common, true);
  ua_cmd->add_option("--g-radius", ua_g_radius)->capture_default_str();
  ua_cmd->add_option("--h-radius", ua_h_radius)->capture_default_str();
  ua_cmd->add_option("--lambda-cap", ua_options.lambda_cap)->capture_default_str();
  ua_cmd->add_option("--witness-cap", ua_options.witness_radius_cap)->capture_default_str();
  ua_cmd->callback([&] {
    action = [&] {
      const Coloring f = compile(parse_spec(common.spec_text));
      return emit_report(
          common, ua_report(f, ua_g_radius, ua_h_radius, common.scan_options(), ua_options));
    };
  });

  std::size_t orbit_schedule_radius = 8, orbit_random = 0, orbit_word_length = 16;
  std::size_t orbit_window = 8, orbit_b_radius = 4;
  auto* orbit_cmd =
      verify_cmd->add_subcommand("orbit", "No translated window pattern has a small period");
  add_common(orbit_cmd, common, true);
  orbit_cmd->add_option("--schedule-radius", orbit_schedule_radius, "Shifts: all of this ball")
      ->capture_default_str();
  orbit_cmd->add_option("--random-schedule", orbit_random,
                        "Use this many seeded random shifts instead");
  orbit_cmd->add_option("--word-length", orbit_word_length, "Length of random shift words")
      ->capture_default_str();
  orbit_cmd->add_option("--window", orbit_window, "Window ball radius")->capture_default_str();
  orbit_cmd->add_option("--b-radius", orbit_b_radius)->capture_default_str();
  orbit_cmd->callback([&] {
    action = [&] {
      const GroupSpec spec = parse_spec(common.spec_text);
      const Coloring f = compile(spec);
      const std::vector<Element> schedule =
          orbit_random > 0
              ? random_schedule(spec, orbit_random, orbit_word_length, common.seed)
              : ball(spec, orbit_schedule_radius, common.max_elements).elements;
      const auto window = ball(spec, orbit_window, common.max_elements).elements;
      return emit_report(common, orbit_pattern_scan(f, schedule, window, orbit_b_radius,
                                                    common.scan_options()));
    };
  });

  // demo counterexample
  auto* demo_cmd = app.add_subcommand("demo", "Executable demonstrations");
  demo_cmd->require_subcommand(1);
  std::size_t demo_colors = 3, demo_domain = 5000, demo_window = 50;
  auto* cx_cmd = demo_cmd->add_subcommand("counterexample",
                                          "N is not a limit aperiodic <s,t>-set");
  add_common(cx_cmd, common, false);
  cx_cmd->add_option("--colors", demo_colors)->capture_default_str();
  cx_cmd->add_option("--domain", demo_domain)->capture_default_str();
  cx_cmd->add_option("--window", demo_window)->capture_default_str();
  cx_cmd->callback([&] {
    action = [&] {
      const CounterexampleDemo demo =
          run_counterexample(demo_colors, demo_domain, demo_window, common.seed);
      std::ostringstream out;
      out << "coloring: " << demo_colors << " colors on [0.." << demo_domain << "], seed "
          << common.seed << "\n";
      out << "color: " << demo.sequence.color << "\n";
      out << "sequence:";
      for (auto a : demo.sequence.indices) out << ' ' << a;
      out << "\nh_" << demo_window << ": " << demo.hn.cycles() << "\n";
      out << "pattern [1.." << demo_window << "]:";
      for (int c : demo.pattern) out << ' ' << c;
      out << "\nverdict: " << (demo.constant ? "PASS constant pattern (every shift is a period)"
                                             : "FAIL pattern not constant")
          << "\n";
      emit(common, out.str());
      return demo.constant ? kExitPass : kExitFail;
    };
  });

  // render grid
  auto* render_cmd = app.add_subcommand("render", "Render colorings as images");
  render_cmd->require_subcommand(1);
  std::int64_t grid_n = 64;
  auto* grid_cmd = render_cmd->add_subcommand("grid", "prod(Z,Z) coloring over [-N,N]^2");
  add_common(grid_cmd, common, true);
  grid_cmd->add_option("--n", grid_n)->capture_default_str();
  grid_cmd->callback([&] {
    action = [&] {
      const GridImage image = render_grid(compile(parse_spec(common.spec_text)), grid_n);
      std::ostringstream out;
      write_image(out, image);
      emit(common, out.str());
      return kExitPass;
    };
  });

  // seq dump
  auto* seq_cmd = app.add_subcommand("seq", "Sequence utilities");
  seq_cmd->require_subcommand(1);
  std::string seq_kind = "thue-morse";
  std::size_t seq_n = 64;
  auto* dump_cmd = seq_cmd->add_subcommand("dump", "First N terms as one line");
  add_common(dump_cmd, common, false);
  dump_cmd->add_option("--kind", seq_kind)
      ->check(CLI::IsMember({"thue-morse", "ternary"}))
      ->capture_default_str();
  dump_cmd->add_option("--n", seq_n)->capture_default_str();
  dump_cmd->callback([&] {
    action = [&] {
      CachedSequence seq =
          seq_kind == "thue-morse" ? thue_morse_sequence() : squarefree_ternary_sequence();
      emit(common, dump_terms(seq, seq_n) + "\n");
      return kExitPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "lacolor: " << e.what() << "\n";
    std::cerr << "  " << common.spec_text << "\n  "
              << std::string(e.begin().line == 1 ? e.begin().column - 1 : 0, ' ') << "^\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "lacolor: INCONCLUSIVE-AT-CAP: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "lacolor: " << e.what() << "\n";
    return kExitUsage;
  }
}
