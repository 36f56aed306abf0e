#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indcert/ast.hpp"
#include "indcert/sexpr.hpp"

namespace indcert {

using sexpr::Position;
using sexpr::SyntaxError;

/// A well-formed command or term that lies outside the supported subset
/// (other sorts, let, ite, non-linear products, ...).
class UnsupportedConstruct : public std::runtime_error {
 public:
  UnsupportedConstruct(std::string construct, Position pos);
  const std::string& construct() const { return construct_; }
  const Position& position() const { return pos_; }

 private:
  std::string construct_;
  Position pos_;
};

struct Script {
  /// Conjunction of all assertions (True when there are none).
  Formula formula = Formula::truth();
  std::vector<Formula> assertions;
  std::set<std::string> constants;
  std::map<std::string, std::size_t> functions;  // name -> arity
};

/// Parses the supported SMT-LIB v2 subset: set-logic/set-info/set-option
/// (ignored), declare-const, declare-fun over Int, assert, check-sat, exit.
Script parse_script(std::string_view text);
Formula parse(std::string_view text);

/// Parses a single term or formula in isolation. Symbols in `bound` parse
/// as variables, every other symbol as a constant or function.
Term parse_term(std::string_view text, const std::set<std::string>& bound = {});
Formula parse_formula(std::string_view text, const std::set<std::string>& bound = {});

/// Symbols containing `!` are reserved for generated names.
bool is_reserved_symbol(std::string_view name);

}  // namespace indcert
