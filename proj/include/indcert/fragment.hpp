#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "indcert/ast.hpp"

namespace indcert {

/// Direction of propagation, or the sign of a coefficient.
enum class Sign { Plus, Minus };

inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
const char* to_string(Sign s);

/// Closed integer interval [lo, hi] of instantiations.
struct Interval {
  Int lo = 0;
  Int hi = 0;

  bool contains(const Int& z) const { return lo <= z && z <= hi; }
  /// hi for Plus, lo for Minus.
  const Int& bound(Sign s) const { return s == Sign::Plus ? hi : lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& b);

/// Range restriction on the quantified variable: none, `lo <= x`, or
/// `lo <= x <= hi`.
struct Guard {
  enum class Kind { Unbounded, LowerBounded, DoublyBounded };

  Kind kind = Kind::Unbounded;
  Int lo = 0;
  Int hi = 0;

  static Guard unbounded() { return {}; }
  static Guard lower(Int lo) { return {Kind::LowerBounded, std::move(lo), 0}; }
  static Guard bounded(Int lo, Int hi) { return {Kind::DoublyBounded, std::move(lo), std::move(hi)}; }

  bool contains(const Int& z) const;
  /// Normalized hypothesis over `var`; True when unbounded.
  Formula as_formula(const std::string& var) const;
  /// Propagation directions that need a certificate: both when unbounded,
  /// upward only otherwise.
  std::vector<Sign> directions() const;

  friend bool operator==(const Guard&, const Guard&) = default;
};

std::string to_string(const Guard& g);

class FragmentError : public std::runtime_error {
 public:
  enum class Kind {
    MultipleQuantifiedConjuncts,
    MultipleQuantifiedVariables,
    NestedQuantifier,
    UnsupportedGuard,
    NonUniformCoefficient,
    NestedFunctionArgument,
    ArityTooHigh,
    VariableOutsideQuantifier,
    UndefinedOffset,
  };

  FragmentError(Kind kind, std::string symbol, std::vector<std::string> terms, const std::string& message);

  Kind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<std::string>& terms() const { return terms_; }

 private:
  Kind kind_;
  std::string symbol_;
  std::vector<std::string> terms_;
};

const char* to_string(FragmentError::Kind k);

/// An application f(t) occurring in Q, with t = coeff*x + offset.
struct QTerm {
  std::size_t index = 0;  // position in FragmentProblem::qterms
  std::string fsym;
  Int coeff = 0;
  LinearTerm offset;             // t[x := 0]
  Term original = Term::num(0);  // t as written
  Term app = Term::num(0);       // f(t) as written
  std::string id;                // printed f(t) with the variable named `x`
};

struct FunctionInfo {
  std::string name;
  std::set<std::size_t> arities;
  std::vector<std::size_t> qterms;  // indices into FragmentProblem::qterms
  std::vector<Term> f_args;         // distinct arguments of this symbol in F

  /// Common coefficient of x among the Q occurrences (first one seen).
  std::optional<Int> coeff() const { return coeff_; }
  bool zero_coeff() const { return coeff_ && *coeff_ == 0; }
  /// Sign of the coefficient; Plus for zero or absent coefficients.
  Sign sign() const { return coeff_ && *coeff_ < 0 ? Sign::Minus : Sign::Plus; }

  std::optional<Int> coeff_;
};

struct FragmentProblem {
  Formula F = Formula::truth();
  Formula Q = Formula::truth();
  std::string var = "x";
  bool has_quantifier = false;
  Guard guard;
  std::map<std::string, FunctionInfo> funcs;
  std::vector<QTerm> qterms;
  std::set<std::string> consts;

  const QTerm& qterm(std::size_t i) const { return qterms.at(i); }
  const FunctionInfo& func(const std::string& f) const { return funcs.at(f); }
  /// Index of the QTerm with this identifier, if any.
  std::optional<std::size_t> find_qterm(const std::string& id) const;
};

/// Splits `phi` into F and `forall x. guard => Q`; populates the symbol
/// inventory. Throws FragmentError for quantifier-structure violations.
FragmentProblem decompose(const Formula& phi);

/// Checks the syntactic fragment restrictions; throws the first violation.
void validate(const FragmentProblem& p);

/// decompose + validate.
FragmentProblem analyze(const Formula& phi);

/// F /\ forall x. guard => Q, with the guard in normalized spelling.
Formula recompose(const FragmentProblem& p);

/// Value of a ground offset under `I`; throws UndefinedOffset.
Int eval_offset(const QTerm& t, const CellInterpretation& I);

/// Cell touched by QTerm `t` under the instantiation x := z.
Cell cell_at(const QTerm& t, const CellInterpretation& I, const Int& z);

/// The cells instantiation x := z touches under I.
std::set<Cell> relevant_cells(const FragmentProblem& p, const CellInterpretation& I, const Int& z);

}  // namespace indcert
