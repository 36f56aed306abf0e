#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace indcert {

/// Arbitrary-precision integer; guard bounds like 10^c and scaled arguments
/// routinely leave the 64-bit range.
using Int = boost::multiprecision::cpp_int;

Int parse_int(std::string_view text);

/// Immutable linear-arithmetic term with uninterpreted function applications.
class Term {
 public:
  enum class Kind { IntConst, Const, Var, Add, Mul, Neg, App };

  static Term num(Int value);
  static Term constant(std::string name);
  static Term var(std::string name);
  static Term add(Term lhs, Term rhs);
  /// Folds `k * numeral` into a numeral.
  static Term mul(Int coeff, Term t);
  /// Folds the negation of a numeral into a numeral.
  static Term neg(Term t);
  static Term app(std::string fsym, std::vector<Term> args);
  static Term app(std::string fsym, Term arg);

  Kind kind() const;
  /// Numeral value for IntConst, coefficient for Mul.
  const Int& value() const;
  /// Symbol for Const, Var and App.
  const std::string& name() const;
  const Term& lhs() const;
  const Term& rhs() const;
  /// Operand of Mul and Neg.
  const Term& operand() const;
  const std::vector<Term>& args() const;

  bool is_num() const { return kind() == Kind::IntConst; }
  bool is_app() const { return kind() == Kind::App; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Rel { Eq, Le, Lt, Ge, Gt, Ne };

const char* to_string(Rel rel);

class Formula {
 public:
  enum class Kind { True, False, Atom, Prop, Not, And, Or, Implies, Forall, Exists };

  static Formula truth();
  static Formula falsity();
  static Formula atom(Rel rel, Term lhs, Term rhs);
  /// Propositional (Boolean) constant, used for selector variables.
  static Formula prop(std::string name);
  /// `not (= a b)` is stored as the disequality atom `a != b`.
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  Rel rel() const;
  const Term& lhs_term() const;
  const Term& rhs_term() const;
  /// Prop name, or the bound variable of a quantifier.
  const std::string& name() const;
  const std::vector<Formula>& parts() const;
  /// Body of Not / Forall / Exists.
  const Formula& body() const;

  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// `True` for no parts, the part itself for one, `And` otherwise.
Formula conjoin(std::vector<Formula> parts);
Formula disjoin(std::vector<Formula> parts);

// ---------------------------------------------------------------------------
// Printing (SMT-LIB v2 concrete syntax)

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::string int_to_smtlib(const Int& v);

// ---------------------------------------------------------------------------
// Substitution and traversal

Term substitute(const Term& t, const std::string& var, const Term& replacement);
/// Replaces free occurrences only; binders of the same name shadow.
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);

/// Rewrites every App node bottom-up through `fn`; other nodes are rebuilt.
Term map_apps(const Term& t, const std::function<Term(const Term&)>& fn);
Formula map_apps(const Formula& f, const std::function<Term(const Term&)>& fn);
/// Rewrites every Const node through `fn`.
Formula map_consts(const Formula& f, const std::function<Term(const Term&)>& fn);

struct Symbols {
  std::set<std::string> int_consts;
  std::map<std::string, std::size_t> functions;  // name -> arity
  std::set<std::string> props;
  std::set<std::string> free_vars;
};

void collect_symbols(const Term& t, Symbols& out, const std::set<std::string>& bound = {});
void collect_symbols(const Formula& f, Symbols& out, const std::set<std::string>& bound = {});
Symbols symbols_of(const Formula& f);

/// All App sub-terms in pre-order, duplicates included.
void collect_apps(const Term& t, std::vector<Term>& out);
void collect_apps(const Formula& f, std::vector<Term>& out);

bool contains_var(const Term& t, const std::string& var);
bool is_quantifier_free(const Formula& f);

// ---------------------------------------------------------------------------
// Linear normal form

/// c0 + sum(k_i * var_i) + sum(k_j * const_j); zero coefficients are dropped.
struct LinearTerm {
  Int constant = 0;
  std::map<std::string, Int> vars;
  std::map<std::string, Int> consts;

  Int var_coeff(const std::string& var) const;
  bool is_numeral() const { return vars.empty() && consts.empty(); }
  LinearTerm without_var(const std::string& var) const;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// nullopt when `t` contains an application.
std::optional<LinearTerm> linearize(const Term& t);
/// Canonical term: variables, then constants (sorted by name), then numeral.
Term to_term(const LinearTerm& lt);

// ---------------------------------------------------------------------------
// Cells and cell interpretations

/// An uninterpreted constant (no argument) or f(n) with a concrete integer n.
struct Cell {
  std::string symbol;
  std::optional<Int> arg;

  static Cell constant(std::string name) { return {std::move(name), std::nullopt}; }
  static Cell app(std::string fsym, Int n) { return {std::move(fsym), std::move(n)}; }

  friend bool operator==(const Cell& a, const Cell& b);
  friend bool operator<(const Cell& a, const Cell& b);
};

std::string to_string(const Cell& c);
/// The cell as a ground term: `c` or `(f n)`.
Term to_term(const Cell& c);

/// Finite partial map from cells to integers.
class CellInterpretation {
 public:
  using Map = std::map<Cell, Int>;

  void set(const Cell& cell, Int value) { map_[cell] = std::move(value); }
  bool defines(const Cell& cell) const { return map_.count(cell) != 0; }
  std::optional<Int> get(const Cell& cell) const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const Map& cells() const { return map_; }
  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  friend bool operator==(const CellInterpretation&, const CellInterpretation&) = default;

 private:
  Map map_;
};

// ---------------------------------------------------------------------------
// Ground evaluation

/// Value of a variable-free term under `env`, or nullopt (bottom) when some
/// referenced cell is undefined and does not cancel out.
std::optional<Int> eval_ground(const Term& t, const CellInterpretation& env);

enum class Truth { False, True, Undefined };

const char* to_string(Truth t);

/// Three-valued evaluation of a quantifier-free, variable-free formula.
/// Atoms are decided when the difference of both sides is determined by
/// `env`. Selector propositions are looked up in `props`.
Truth eval_formula(const Formula& f, const CellInterpretation& env,
                   const std::map<std::string, bool>& props = {});

}  // namespace indcert
