#include "indcert/encoder.hpp"

namespace indcert {

std::string selector_name(std::size_t term, Sign s) {
  return (s == Sign::Plus ? "p_up!" : "p_down!") + std::to_string(term);
}

Formula strictly_before(Sign s, Term a, Term b) {
  return Formula::atom(s == Sign::Plus ? Rel::Lt : Rel::Gt, std::move(a), std::move(b));
}

Formula instantiate_q(const FragmentProblem& p, const Int& z) {
  return substitute(p.Q, p.var, Term::num(z));
}

Term argument_at(const QTerm& t, const Int& z) {
  LinearTerm lt = t.offset;
  lt.constant += t.coeff * z;
  return to_term(lt);
}

namespace {

// Clauses relating two same-symbol terms i (selected) and j.
Formula pair_condition(const FragmentProblem& p, Sign s, std::size_t i, std::size_t j, bool j_selected) {
  const QTerm& ti = p.qterm(i);
  const QTerm& tj = p.qterm(j);
  Term ai = to_term(ti.offset);
  Term aj = to_term(tj.offset);
  if (j_selected) return Formula::atom(Rel::Eq, ai, aj);
  Sign sigma = p.func(ti.fsym).sign() * s;
  return strictly_before(sigma, aj, ai);
}

}  // namespace

Formula extremal(const FragmentProblem& p, const SubsetPattern& s) {
  std::vector<Formula> parts;
  for (std::size_t i : s.selected) {
    const QTerm& ti = p.qterm(i);
    if (p.func(ti.fsym).zero_coeff()) return Formula::falsity();
    for (std::size_t j : p.func(ti.fsym).qterms) {
      if (j == i) continue;
      bool j_selected = s.selected.count(j) != 0;
      if (j_selected && j < i) continue;  // equalities once per unordered pair
      parts.push_back(pair_condition(p, s.direction, i, j, j_selected));
    }
  }
  return conjoin(parts);
}

namespace {

std::string abstraction_name(std::size_t term, bool selected) {
  return (selected ? "v!" : "u!") + std::to_string(term);
}

}  // namespace

Formula propagability(const FragmentProblem& p, const std::set<std::size_t>& selected) {
  Formula body = map_apps(p.Q, [&](const Term& app) {
    for (const auto& t : p.qterms)
      if (t.app == app) return Term::var(abstraction_name(t.index, selected.count(t.index) != 0));
    return app;
  });
  if (p.guard.kind != Guard::Kind::Unbounded) body = Formula::implies(p.guard.as_formula(p.var), body);
  for (auto it = p.qterms.rbegin(); it != p.qterms.rend(); ++it)
    if (selected.count(it->index)) body = Formula::exists(abstraction_name(it->index, true), body);
  for (auto it = p.qterms.rbegin(); it != p.qterms.rend(); ++it)
    if (!selected.count(it->index)) body = Formula::forall(abstraction_name(it->index, false), body);
  return Formula::forall(p.var, body);
}

namespace {

Formula clash_of(const FragmentProblem& p, Sign s, std::size_t i, const Interval& b) {
  const QTerm& t = p.qterm(i);
  const FunctionInfo& f = p.func(t.fsym);
  Sign sigma = f.sign() * s;
  Term boundary = argument_at(t, b.bound(s));
  std::vector<Formula> parts;
  for (const auto& a : f.f_args) parts.push_back(strictly_before(sigma, a, boundary));
  return conjoin(parts);
}

}  // namespace

Formula clash(const FragmentProblem& p, const SubsetPattern& s, const Interval& b) {
  std::vector<Formula> parts;
  for (std::size_t i : s.selected) {
    Formula c = clash_of(p, s.direction, i, b);
    if (!c.is_true()) parts.push_back(c);
  }
  return conjoin(parts);
}

Formula psi(const FragmentProblem& p, const SubsetPattern& s, const Interval& b) {
  return conjoin({extremal(p, s), propagability(p, s.selected), clash(p, s, b)});
}

SelectorEncoding psi_selector(const FragmentProblem& p, Sign s, const Interval& b) {
  SelectorEncoding enc;
  for (const auto& t : p.qterms) enc.vars.push_back({t.index, s, selector_name(t.index, s)});

  auto sel = [&](std::size_t i) { return Formula::prop(selector_name(i, s)); };
  std::vector<Formula> clauses;
  for (const auto& t : p.qterms) {
    std::size_t i = t.index;
    const FunctionInfo& f = p.func(t.fsym);
    if (f.zero_coeff()) {
      clauses.push_back(Formula::negation(sel(i)));
      continue;
    }
    for (std::size_t j : f.qterms) {
      if (j == i) continue;
      if (i < j)
        clauses.push_back(Formula::implies(Formula::conj({sel(i), sel(j)}), pair_condition(p, s, i, j, true)));
      clauses.push_back(Formula::implies(Formula::conj({sel(i), Formula::negation(sel(j))}),
                                         pair_condition(p, s, i, j, false)));
    }
    Formula c = clash_of(p, s, i, b);
    if (!c.is_true()) clauses.push_back(Formula::implies(sel(i), c));
  }
  enc.formula = conjoin(clauses);
  return enc;
}

Formula blocking_clause(const std::vector<SelectorVar>& vars, const SubsetPattern& pattern) {
  std::vector<Formula> lits;
  for (const auto& v : vars) {
    Formula p = Formula::prop(v.name);
    lits.push_back(pattern.selected.count(v.term) ? Formula::negation(p) : p);
  }
  return lits.empty() ? Formula::falsity() : disjoin(lits);
}

}  // namespace indcert
