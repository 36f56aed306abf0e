#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indcert::sexpr {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string to_string(const Position& pos);

/// Thrown for malformed s-expression text; carries the offending position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Position pos, const std::string& message);
  const Position& position() const { return pos_; }

 private:
  Position pos_;
};

struct SExpr {
  enum class Kind { Atom, String, List };

  Kind kind = Kind::Atom;
  std::string text;  // atom or string contents
  std::vector<SExpr> items;
  Position pos;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_list() const { return kind == Kind::List; }
  bool is_atom(std::string_view s) const { return is_atom() && text == s; }
  /// A list whose first element is the atom `head`.
  bool is_call(std::string_view head) const;
  bool is_numeral() const;
};

/// Renders with single spaces between list items, no trailing whitespace.
std::string to_string(const SExpr& e);

/// Streaming reader over a complete text buffer. Comments (`;` to end of
/// line) are skipped. Quoted symbols `|...|` are returned as atoms without
/// the bars.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  /// Next datum, or nullopt at end of input.
  std::optional<SExpr> next();
  Position position() const { return pos_; }

 private:
  void skip_blank();
  char peek() const { return text_[offset_]; }
  char advance();
  bool at_end() const { return offset_ >= text_.size(); }
  SExpr read_datum();

  std::string_view text_;
  std::size_t offset_ = 0;
  Position pos_;
};

std::vector<SExpr> read_all(std::string_view text);

/// Length of the first complete datum in `buffer` (leading blanks and
/// comments included), or nullopt if more input is needed. A bare atom is
/// only complete once a delimiter follows it.
std::optional<std::size_t> complete_datum_length(std::string_view buffer);

}  // namespace indcert::sexpr
