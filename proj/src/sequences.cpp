#include "lacolor/sequences.hpp"

namespace lacolor {

std::string dump_terms(CachedSequence& seq, std::size_t length) {
  std::string out;
  out.reserve(length);
  for (int v : seq.prefix(length)) out.push_back(static_cast<char>('0' + v));
  return out;
}

}  // namespace lacolor
