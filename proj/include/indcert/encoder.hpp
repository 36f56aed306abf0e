#pragma once

#include <set>
#include <string>
#include <vector>

#include "indcert/fragment.hpp"

namespace indcert {

/// A choice of QTerms (by index) for one propagation direction.
struct SubsetPattern {
  Sign direction = Sign::Plus;
  std::set<std::size_t> selected;

  friend auto operator<=>(const SubsetPattern&, const SubsetPattern&) = default;
};

/// Boolean selector p^s_{f(t)}: true when f(t) is in the pattern for s.
struct SelectorVar {
  std::size_t term = 0;
  Sign direction = Sign::Plus;
  std::string name;
};

std::string selector_name(std::size_t term, Sign s);

/// The strict order for a combined sign: `<` for Plus, `>` for Minus.
Formula strictly_before(Sign s, Term a, Term b);

/// Q[x := z]. No simplification; the guard is the caller's business.
Formula instantiate_q(const FragmentProblem& p, const Int& z);

/// t[x := z] for a QTerm argument, in linear normal form.
Term argument_at(const QTerm& t, const Int& z);

/// Variable-free; False when the pattern selects a zero-coefficient term.
Formula extremal(const FragmentProblem& p, const SubsetPattern& s);

/// forall x forall u. exists v. (guard(x) => Q'), where Q' abstracts the
/// selected occurrences by v and the others by u. Closed; uninterpreted
/// constants of Q stay free.
Formula propagability(const FragmentProblem& p, const std::set<std::size_t>& selected);

/// Selected arguments at the interval boundary stay strictly beyond every
/// argument of the same symbol in F.
Formula clash(const FragmentProblem& p, const SubsetPattern& s, const Interval& b);

Formula psi(const FragmentProblem& p, const SubsetPattern& s, const Interval& b);

struct SelectorEncoding {
  Formula formula = Formula::truth();
  std::vector<SelectorVar> vars;
};

/// Extremal and clash conditions over fresh selector Booleans. Propagability
/// is left to the caller (enforced lazily with blocking clauses).
SelectorEncoding psi_selector(const FragmentProblem& p, Sign s, const Interval& b);

/// Excludes exactly the total assignment `pattern` over `vars`.
Formula blocking_clause(const std::vector<SelectorVar>& vars, const SubsetPattern& pattern);

}  // namespace indcert
