#pragma once

// ℕ with the action of S = ⟨s, t⟩ (s: n -> n+1, t = (0 1)) admits no limit
// aperiodic finite coloring: for a monochromatic increasing sequence
// a_1 < a_2 < ..., the finitary permutations h_n = (1 a_1)(2 a_2)...(n a_n)
// pull any coloring back to a pattern that is constant on [1..n].

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lacolor {

/// Finitely supported permutation of ℕ. Stores only points it moves.
class FinPerm {
 public:
  FinPerm() = default;

  static FinPerm transposition(std::uint64_t i, std::uint64_t j);
  /// Throws ConstructionError unless `images` is a bijection of its keys.
  static FinPerm from_map(std::map<std::uint64_t, std::uint64_t> images);

  std::uint64_t operator()(std::uint64_t x) const;
  /// (p ∘ q)(x) = p(q(x)).
  friend FinPerm compose(const FinPerm& p, const FinPerm& q);
  FinPerm inverse() const;

  const std::map<std::uint64_t, std::uint64_t>& support() const noexcept { return moved_; }
  /// Cycle notation, smallest point first in each cycle; "()" for identity.
  std::string cycles() const;

  friend bool operator==(const FinPerm&, const FinPerm&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> moved_;
};

struct Monochromatic {
  int color = 0;
  std::vector<std::uint64_t> indices;  // strictly increasing, all ≥ 1
};

/// Picks the most frequent color on [1..N] (ties: smallest color) and its
/// `count` smallest indices. `coloring[k]` is the color of k, k = 0..N.
/// Throws ConstructionError when N < count·palette_size (the pigeonhole
/// bound) or when no color reaches `count` occurrences.
Monochromatic find_monochromatic(std::span<const int> coloring, std::size_t count,
                                 std::size_t palette_size);

/// (1 a_1)(2 a_2)...(n a_n), rightmost applied first. Requires a strictly
/// increasing with a_1 ≥ 1 and verifies h_n(k) = a_k for k ≤ n.
FinPerm build_hn(std::span<const std::uint64_t> seq, std::size_t n);

/// pattern(k) = f(h(k)) for k = 1..window (index 0 of the result is k = 1).
/// Throws ConstructionError if some h(k) leaves the coloring's domain.
std::vector<int> pullback_pattern(std::span<const int> coloring, const FinPerm& h,
                                  std::size_t window);

enum class Generator : std::uint8_t { S, SInv, T, TInv };
using GeneratorWord = std::vector<Generator>;

/// Word in s^{±1}, t^{±1} whose permutation of Z is the transposition (i j),
/// built from the adjacent swaps s^i t s^{-i} = (i i+1).
GeneratorWord transposition_word(std::uint64_t i, std::uint64_t j);
/// Acts on Z; letters applied right to left.
std::int64_t apply_word(const GeneratorWord& word, std::int64_t point);
/// "s t s^-1".
std::string to_string(const GeneratorWord& word);

struct CounterexampleDemo {
  std::vector<int> coloring;
  Monochromatic sequence;
  FinPerm hn;
  std::vector<int> pattern;
  bool constant = false;
};

/// Seeded random coloring of [0..domain] with `colors` colors, then
/// find_monochromatic(window) -> build_hn(window) -> pullback_pattern(window).
CounterexampleDemo run_counterexample(std::size_t colors, std::size_t domain, std::size_t window,
                                      std::uint64_t seed);

}  // namespace lacolor
