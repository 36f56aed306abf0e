#include "indcert/sexpr.hpp"

#include <cctype>

namespace indcert::sexpr {

std::string to_string(const Position& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

SyntaxError::SyntaxError(Position pos, const std::string& message)
    : std::runtime_error(to_string(pos) + ": " + message), pos_(pos) {}

bool SExpr::is_call(std::string_view head) const {
  return is_list() && !items.empty() && items.front().is_atom(head);
}

bool SExpr::is_numeral() const {
  if (!is_atom() || text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string to_string(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Atom:
      return e.text;
    case SExpr::Kind::String: {
      std::string out = "\"";
      for (char c : e.text) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    }
    case SExpr::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += to_string(e.items[i]);
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' ||
         c == '"' || c == '|';
}

}  // namespace

char Reader::advance() {
  char c = text_[offset_++];
  if (c == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else {
    ++pos_.column;
  }
  return c;
}

void Reader::skip_blank() {
  while (!at_end()) {
    char c = peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == ';') {
      while (!at_end() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

std::optional<SExpr> Reader::next() {
  skip_blank();
  if (at_end()) return std::nullopt;
  return read_datum();
}

SExpr Reader::read_datum() {
  skip_blank();
  if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
  SExpr e;
  e.pos = pos_;
  char c = peek();
  if (c == '(') {
    advance();
    e.kind = SExpr::Kind::List;
    for (;;) {
      skip_blank();
      if (at_end()) throw SyntaxError(e.pos, "unbalanced '('");
      if (peek() == ')') {
        advance();
        break;
      }
      e.items.push_back(read_datum());
    }
    return e;
  }
  if (c == ')') throw SyntaxError(pos_, "unexpected ')'");
  if (c == '"') {
    advance();
    e.kind = SExpr::Kind::String;
    for (;;) {
      if (at_end()) throw SyntaxError(e.pos, "unterminated string literal");
      char d = advance();
      if (d == '"') {
        if (!at_end() && peek() == '"') {
          e.text += advance();
          continue;
        }
        break;
      }
      e.text += d;
    }
    return e;
  }
  if (c == '|') {
    advance();
    e.kind = SExpr::Kind::Atom;
    for (;;) {
      if (at_end()) throw SyntaxError(e.pos, "unterminated quoted symbol");
      char d = advance();
      if (d == '|') break;
      e.text += d;
    }
    return e;
  }
  e.kind = SExpr::Kind::Atom;
  while (!at_end() && !is_delimiter(peek())) e.text += advance();
  return e;
}

std::vector<SExpr> read_all(std::string_view text) {
  Reader reader(text);
  std::vector<SExpr> out;
  while (auto e = reader.next()) out.push_back(std::move(*e));
  return out;
}

std::optional<std::size_t> complete_datum_length(std::string_view buf) {
  std::size_t i = 0;
  // leading blanks and comments
  for (;;) {
    while (i < buf.size() && std::isspace(static_cast<unsigned char>(buf[i]))) ++i;
    if (i < buf.size() && buf[i] == ';') {
      while (i < buf.size() && buf[i] != '\n') ++i;
      if (i == buf.size()) return std::nullopt;
      continue;
    }
    break;
  }
  if (i == buf.size()) return std::nullopt;
  int depth = 0;
  bool started_list = buf[i] == '(';
  while (i < buf.size()) {
    char c = buf[i];
    if (c == '"') {
      ++i;
      for (;;) {
        if (i >= buf.size()) return std::nullopt;
        if (buf[i] == '"') {
          if (i + 1 < buf.size() && buf[i + 1] == '"') {
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        ++i;
      }
    } else if (c == '|') {
      std::size_t close = buf.find('|', i + 1);
      if (close == std::string_view::npos) return std::nullopt;
      i = close + 1;
    } else if (c == ';' && depth > 0) {
      while (i < buf.size() && buf[i] != '\n') ++i;
    } else if (c == '(') {
      ++depth;
      ++i;
    } else if (c == ')') {
      --depth;
      ++i;
      if (depth <= 0) return i;
    } else if (!started_list) {
      while (i < buf.size() && !is_delimiter(buf[i])) ++i;
      if (i == buf.size()) return std::nullopt;
      return i;
    } else {
      ++i;
    }
    if (!started_list && depth == 0) return i;
  }
  return std::nullopt;
}

}  // namespace indcert::sexpr
