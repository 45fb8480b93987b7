#include "lacolor/counterexample.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lacolor/errors.hpp"

namespace lacolor {

FinPerm FinPerm::transposition(std::uint64_t i, std::uint64_t j) {
  FinPerm p;
  if (i != j) {
    p.moved_[i] = j;
    p.moved_[j] = i;
  }
  return p;
}

FinPerm FinPerm::from_map(std::map<std::uint64_t, std::uint64_t> images) {
  std::set<std::uint64_t> targets;
  for (const auto& [x, y] : images) {
    if (!images.contains(y)) throw ConstructionError("FinPerm: image outside the support");
    if (!targets.insert(y).second) throw ConstructionError("FinPerm: not injective");
  }
  FinPerm p;
  for (const auto& [x, y] : images) {
    if (x != y) p.moved_.emplace(x, y);
  }
  return p;
}

std::uint64_t FinPerm::operator()(std::uint64_t x) const {
  auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

FinPerm compose(const FinPerm& p, const FinPerm& q) {
  FinPerm r;
  std::set<std::uint64_t> points;
  for (const auto& [x, y] : p.moved_) points.insert(x);
  for (const auto& [x, y] : q.moved_) points.insert(x);
  for (auto x : points) {
    const auto y = p(q(x));
    if (y != x) r.moved_.emplace(x, y);
  }
  return r;
}

FinPerm FinPerm::inverse() const {
  FinPerm r;
  for (const auto& [x, y] : moved_) r.moved_.emplace(y, x);
  return r;
}

std::string FinPerm::cycles() const {
  if (moved_.empty()) return "()";
  std::string out;
  std::set<std::uint64_t> done;
  for (const auto& [start, _] : moved_) {
    if (done.contains(start)) continue;
    out += "(";
    std::uint64_t x = start;
    bool first = true;
    do {
      if (!first) out += " ";
      first = false;
      out += std::to_string(x);
      done.insert(x);
      x = (*this)(x);
    } while (x != start);
    out += ")";
  }
  return out;
}

Monochromatic find_monochromatic(std::span<const int> coloring, std::size_t count,
                                 std::size_t palette_size) {
  if (coloring.empty()) throw ConstructionError("find_monochromatic: empty coloring");
  const std::size_t n = coloring.size() - 1;  // candidates are 1..N
  if (n < count * palette_size) {
    throw ConstructionError("find_monochromatic: window [1.." + std::to_string(n) +
                            "] below the pigeonhole bound count*|palette| = " +
                            std::to_string(count * palette_size));
  }
  std::map<int, std::size_t> frequency;
  for (std::size_t k = 1; k <= n; ++k) ++frequency[coloring[k]];
  auto best = frequency.begin();
  for (auto it = frequency.begin(); it != frequency.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  if (best->second < count) {
    throw ConstructionError("find_monochromatic: no color occurs " + std::to_string(count) +
                            " times; palette_size understates the colors in use");
  }
  Monochromatic result{best->first, {}};
  for (std::size_t k = 1; k <= n && result.indices.size() < count; ++k) {
    if (coloring[k] == best->first) result.indices.push_back(k);
  }
  return result;
}

FinPerm build_hn(std::span<const std::uint64_t> seq, std::size_t n) {
  if (n > seq.size()) throw ConstructionError("build_hn: n exceeds the sequence length");
  for (std::size_t k = 0; k < n; ++k) {
    if (seq[k] < 1 || (k > 0 && seq[k] <= seq[k - 1])) {
      throw ConstructionError("build_hn: sequence must be strictly increasing from 1");
    }
  }
  FinPerm h;
  for (std::size_t k = 1; k <= n; ++k) h = compose(h, FinPerm::transposition(k, seq[k - 1]));
  for (std::size_t k = 1; k <= n; ++k) {
    if (h(k) != seq[k - 1]) {
      throw ConstructionError("build_hn: h_n(" + std::to_string(k) + ") != a_" + std::to_string(k));
    }
  }
  return h;
}

std::vector<int> pullback_pattern(std::span<const int> coloring, const FinPerm& h,
                                  std::size_t window) {
  std::vector<int> out;
  out.reserve(window);
  for (std::uint64_t k = 1; k <= window; ++k) {
    const std::uint64_t image = h(k);
    if (image >= coloring.size()) {
      throw ConstructionError("pullback_pattern: h(" + std::to_string(k) + ") = " +
                              std::to_string(image) + " leaves the domain [0.." +
                              std::to_string(coloring.size() - 1) + "]");
    }
    out.push_back(coloring[image]);
  }
  return out;
}

namespace {

// (i i+1) = s^i t s^{-i}
void append_adjacent_swap(GeneratorWord& word, std::uint64_t i) {
  word.insert(word.end(), i, Generator::S);
  word.push_back(Generator::T);
  word.insert(word.end(), i, Generator::SInv);
}

void free_reduce(GeneratorWord& word) {
  GeneratorWord out;
  for (auto g : word) {
    const bool cancels =
        !out.empty() && ((out.back() == Generator::S && g == Generator::SInv) ||
                         (out.back() == Generator::SInv && g == Generator::S) ||
                         (out.back() == Generator::T && g == Generator::TInv) ||
                         (out.back() == Generator::TInv && g == Generator::T));
    if (cancels) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  word = std::move(out);
}

}  // namespace

GeneratorWord transposition_word(std::uint64_t i, std::uint64_t j) {
  if (i >= j) throw DomainError("transposition_word: requires i < j");
  // (i j) = (j-1 j)...(i+1 i+2)(i i+1)(i+1 i+2)...(j-1 j)
  GeneratorWord word;
  for (std::uint64_t k = j - 1; k > i; --k) append_adjacent_swap(word, k);
  append_adjacent_swap(word, i);
  for (std::uint64_t k = i + 1; k < j; ++k) append_adjacent_swap(word, k);
  free_reduce(word);
  return word;
}

std::int64_t apply_word(const GeneratorWord& word, std::int64_t point) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case Generator::S:
        ++point;
        break;
      case Generator::SInv:
        --point;
        break;
      case Generator::T:
      case Generator::TInv:
        if (point == 0) {
          point = 1;
        } else if (point == 1) {
          point = 0;
        }
        break;
    }
  }
  return point;
}

std::string to_string(const GeneratorWord& word) {
  std::string out;
  for (auto g : word) {
    if (!out.empty()) out += ' ';
    switch (g) {
      case Generator::S:
        out += "s";
        break;
      case Generator::SInv:
        out += "s^-1";
        break;
      case Generator::T:
        out += "t";
        break;
      case Generator::TInv:
        out += "t^-1";
        break;
    }
  }
  return out.empty() ? "e" : out;
}

CounterexampleDemo run_counterexample(std::size_t colors, std::size_t domain, std::size_t window,
                                      std::uint64_t seed) {
  if (colors == 0) throw ConstructionError("run_counterexample: need at least one color");
  CounterexampleDemo demo;
  std::mt19937_64 rng(seed);
  demo.coloring.resize(domain + 1);
  for (auto& c : demo.coloring) c = static_cast<int>(rng() % colors);
  demo.sequence = find_monochromatic(demo.coloring, window, colors);
  demo.hn = build_hn(demo.sequence.indices, window);
  demo.pattern = pullback_pattern(demo.coloring, demo.hn, window);
  demo.constant = std::all_of(demo.pattern.begin(), demo.pattern.end(),
                              [&](int c) { return c == demo.sequence.color; });
  return demo;
}

}  // namespace lacolor
