#include "lacolor/spec_parser.hpp"

#include <cctype>

namespace lacolor {

namespace {

std::string format_message(ParseError::Kind kind, SourcePos begin, const std::string& message) {
  return std::string(kind == ParseError::Kind::Syntax ? "syntax error" : "semantic error") +
         " at " + std::to_string(begin.line) + ":" + std::to_string(begin.column) + ": " +
         message;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec g = group();
    skip_ws();
    if (pos_ < text_.size()) syntax_error("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void syntax_error(const std::string& message) {
    throw ParseError(ParseError::Kind::Syntax, here(), here_plus(1), message);
  }

  SourcePos here() const { return at(pos_); }
  SourcePos here_plus(std::size_t n) const { return at(std::min(pos_ + n, text_.size())); }

  SourcePos at(std::size_t offset) const {
    SourcePos p;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) syntax_error(std::string("expected '") + c + "', got end of input");
    if (text_[pos_] != c) {
      syntax_error(std::string("expected '") + c + "', got '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  GroupSpec group() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view name = identifier();
    if (name == "Z") return GroupSpec::z();
    if (name == "prod" || name == "free") {
      expect('(');
      GroupSpec a = group();
      expect(',');
      GroupSpec b = group();
      expect(')');
      return name == "prod" ? GroupSpec::prod(std::move(a), std::move(b))
                            : GroupSpec::free(std::move(a), std::move(b));
    }
    if (name == "hnn") {
      expect('(');
      skip_ws();
      const std::size_t base_start = pos_;
      GroupSpec base = group();
      const std::size_t base_end = pos_;
      expect(',');
      const std::size_t auto_start = (skip_ws(), pos_);
      const std::string_view automorphism = identifier();
      Automorphism a;
      if (automorphism == "id") {
        a = Automorphism::Identity;
      } else if (automorphism == "inv") {
        a = Automorphism::Inversion;
      } else {
        pos_ = auto_start;
        syntax_error("expected automorphism 'id' or 'inv'");
      }
      expect(')');
      if (base.kind() != GroupSpec::Kind::Z) {
        throw ParseError(ParseError::Kind::Semantic, at(base_start), at(base_end),
                         "unsupported hnn base '" + base.to_string() + "': only Z is supported");
      }
      return GroupSpec::hnn(std::move(base), a);
    }
    pos_ = start;
    if (pos_ >= text_.size()) syntax_error("expected a group expression, got end of input");
    syntax_error("expected 'Z', 'prod(', 'free(' or 'hnn('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(Kind kind, SourcePos begin, SourcePos end, const std::string& message)
    : std::runtime_error(format_message(kind, begin, message)),
      kind_(kind),
      begin_(begin),
      end_(end) {}

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace lacolor
