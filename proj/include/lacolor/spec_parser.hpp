#pragma once

// Constructor DSL:
//   group := "Z" | "prod(" group "," group ")" | "free(" group "," group ")"
//          | "hnn(" group "," auto ")"
//   auto  := "id" | "inv"
// Whitespace (including newlines) is ignored between tokens.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lacolor/group_spec.hpp"

namespace lacolor {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, SourcePos begin, SourcePos end, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  SourcePos begin() const noexcept { return begin_; }
  SourcePos end() const noexcept { return end_; }

 private:
  Kind kind_;
  SourcePos begin_;
  SourcePos end_;
};

GroupSpec parse_spec(std::string_view text);

inline std::string print_spec(const GroupSpec& spec) { return spec.to_string(); }

}  // namespace lacolor
