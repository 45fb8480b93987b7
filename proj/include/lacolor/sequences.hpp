#pragma once

// Thue–Morse and the square-free ternary word derived from it.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace lacolor {

/// m(n): parity of the number of ones in the binary expansion of n.
inline int thue_morse(std::uint64_t n) noexcept {
  return __builtin_popcountll(n) & 1;
}

/// ν(n): number of ones between the n-th and (n+1)-th zero of Thue–Morse.
/// The n-th zero sits at 2n + m(n), which gives the closed form below.
inline int squarefree_ternary(std::uint64_t n) noexcept {
  return 1 + thue_morse(n + 1) - thue_morse(n);
}

/// True iff some nonempty W with WW a contiguous factor of `word` exists.
template <class T>
bool has_square(std::span<const T> word) {
  const std::size_t n = word.size();
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    for (std::size_t start = 0; start + 2 * half <= n; ++start) {
      std::size_t k = 0;
      while (k < half && word[start + k] == word[start + half + k]) ++k;
      if (k == half) return true;
    }
  }
  return false;
}

inline bool has_square(const std::string& word) {
  return has_square(std::span<const char>(word.data(), word.size()));
}

/// Append-only prefix memo over a pure index function. Lookups past the
/// cached prefix fall back to the pure function; extension takes a unique
/// lock so concurrent readers are safe.
class CachedSequence {
 public:
  using Evaluator = int (*)(std::uint64_t) noexcept;

  explicit CachedSequence(Evaluator eval) : eval_(eval) {}

  int at(std::uint64_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (n < cache_.size()) return cache_[n];
    }
    return eval_(n);
  }

  void extend_to(std::size_t length) {
    std::unique_lock lock(mutex_);
    cache_.reserve(length);
    for (std::size_t i = cache_.size(); i < length; ++i) {
      cache_.push_back(static_cast<std::int8_t>(eval_(i)));
    }
  }

  std::vector<int> prefix(std::size_t length) {
    extend_to(length);
    std::shared_lock lock(mutex_);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(length)};
  }

  std::size_t cached() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  Evaluator eval_;
  mutable std::shared_mutex mutex_;
  std::vector<std::int8_t> cache_;
};

inline CachedSequence thue_morse_sequence() { return CachedSequence(&thue_morse); }
inline CachedSequence squarefree_ternary_sequence() {
  return CachedSequence(&squarefree_ternary);
}

/// First `length` terms as a string of digits, e.g. "0110100110010110".
std::string dump_terms(CachedSequence& seq, std::size_t length);

}  // namespace lacolor
