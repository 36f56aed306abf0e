#include "indcert/fragment.hpp"

#include <algorithm>

namespace indcert {

const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string to_string(const Interval& b) { return "[" + b.lo.str() + ", " + b.hi.str() + "]"; }

bool Guard::contains(const Int& z) const {
  switch (kind) {
    case Kind::Unbounded: return true;
    case Kind::LowerBounded: return lo <= z;
    case Kind::DoublyBounded: return lo <= z && z <= hi;
  }
  return true;
}

Formula Guard::as_formula(const std::string& var) const {
  switch (kind) {
    case Kind::Unbounded:
      return Formula::truth();
    case Kind::LowerBounded:
      return Formula::atom(Rel::Le, Term::num(lo), Term::var(var));
    case Kind::DoublyBounded:
      return Formula::conj({Formula::atom(Rel::Le, Term::num(lo), Term::var(var)),
                            Formula::atom(Rel::Le, Term::var(var), Term::num(hi))});
  }
  return Formula::truth();
}

std::vector<Sign> Guard::directions() const {
  if (kind == Kind::Unbounded) return {Sign::Plus, Sign::Minus};
  return {Sign::Plus};
}

std::string to_string(const Guard& g) {
  switch (g.kind) {
    case Guard::Kind::Unbounded: return "none";
    case Guard::Kind::LowerBounded: return "lower " + g.lo.str();
    case Guard::Kind::DoublyBounded: return "bounded " + g.lo.str() + " " + g.hi.str();
  }
  return "?";
}

const char* to_string(FragmentError::Kind k) {
  using K = FragmentError::Kind;
  switch (k) {
    case K::MultipleQuantifiedConjuncts: return "MultipleQuantifiedConjuncts";
    case K::MultipleQuantifiedVariables: return "MultipleQuantifiedVariables";
    case K::NestedQuantifier: return "NestedQuantifier";
    case K::UnsupportedGuard: return "UnsupportedGuard";
    case K::NonUniformCoefficient: return "NonUniformCoefficient";
    case K::NestedFunctionArgument: return "NestedFunctionArgument";
    case K::ArityTooHigh: return "ArityTooHigh";
    case K::VariableOutsideQuantifier: return "VariableOutsideQuantifier";
    case K::UndefinedOffset: return "UndefinedOffset";
  }
  return "?";
}

FragmentError::FragmentError(Kind kind, std::string symbol, std::vector<std::string> terms,
                             const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      symbol_(std::move(symbol)),
      terms_(std::move(terms)) {}

std::optional<std::size_t> FragmentProblem::find_qterm(const std::string& id) const {
  for (const auto& t : qterms)
    if (t.id == id) return t.index;
  return std::nullopt;
}

namespace {

using K = FragmentError::Kind;

void flatten_conjunction(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And) {
    for (const auto& p : f.parts()) flatten_conjunction(p, out);
  } else if (!f.is_true()) {
    out.push_back(f);
  }
}

bool is_var(const Term& t, const std::string& var) {
  return t.kind() == Term::Kind::Var && t.name() == var;
}

/// One side of a guard: the bound it places on `var`.
struct Bound {
  bool lower;  // lo <= x when true, x <= hi otherwise
  Term endpoint;
  bool strict;
};

std::optional<Bound> as_bound(const Formula& f, const std::string& var) {
  if (f.kind() != Formula::Kind::Atom) return std::nullopt;
  Rel rel = f.rel();
  if (rel == Rel::Eq || rel == Rel::Ne) return std::nullopt;
  const Term& l = f.lhs_term();
  const Term& r = f.rhs_term();
  bool var_left = is_var(l, var) && !contains_var(r, var);
  bool var_right = is_var(r, var) && !contains_var(l, var);
  if (!var_left && !var_right) return std::nullopt;
  bool strict = rel == Rel::Lt || rel == Rel::Gt;
  bool less = rel == Rel::Lt || rel == Rel::Le;  // l < r  or l <= r
  // var on the left of `<`/`<=` is an upper bound, on the right a lower one.
  bool lower = var_left ? !less : less;
  return Bound{lower, var_left ? r : l, strict};
}

Int bound_value(const Bound& b) {
  if (!b.endpoint.is_num())
    throw FragmentError(K::UnsupportedGuard, "", {to_string(b.endpoint)},
                        "guard endpoint '" + to_string(b.endpoint) + "' is not an integer numeral");
  if (!b.strict) return b.endpoint.value();
  return b.lower ? Int(b.endpoint.value() + 1) : Int(b.endpoint.value() - 1);
}

/// Recognizes `lo <= x => Q` and `(lo <= x /\ x <= hi) => Q` (any spelling).
std::optional<std::pair<Guard, Formula>> extract_guard(const Formula& body, const std::string& var) {
  if (body.kind() != Formula::Kind::Implies) return std::nullopt;
  const Formula& hyp = body.parts()[0];
  std::vector<Formula> atoms;
  flatten_conjunction(hyp, atoms);
  if (atoms.empty() || atoms.size() > 2) return std::nullopt;
  std::vector<Bound> bounds;
  for (const auto& a : atoms) {
    auto b = as_bound(a, var);
    if (!b) return std::nullopt;
    bounds.push_back(*b);
  }
  std::optional<Int> lo, hi;
  for (const auto& b : bounds) {
    auto& slot = b.lower ? lo : hi;
    if (slot) return std::nullopt;
    slot = bound_value(b);
  }
  if (!lo) return std::nullopt;
  if (!hi) return std::make_pair(Guard::lower(*lo), body.parts()[1]);
  if (*lo > *hi)
    throw FragmentError(K::UnsupportedGuard, "", {to_string(hyp)},
                        "empty guard range [" + lo->str() + ", " + hi->str() + "]");
  return std::make_pair(Guard::bounded(*lo, *hi), body.parts()[1]);
}

bool has_quantifier(const Formula& f) { return !is_quantifier_free(f); }

void record_f_apps(FragmentProblem& p) {
  std::vector<Term> apps;
  collect_apps(p.F, apps);
  for (const auto& a : apps) {
    auto& info = p.funcs[a.name()];
    info.name = a.name();
    info.arities.insert(a.args().size());
    if (a.args().size() != 1) continue;
    const Term& arg = a.args()[0];
    if (std::find(info.f_args.begin(), info.f_args.end(), arg) == info.f_args.end())
      info.f_args.push_back(arg);
  }
}

void record_q_apps(FragmentProblem& p) {
  std::vector<Term> apps;
  collect_apps(p.Q, apps);
  for (const auto& a : apps) {
    auto& info = p.funcs[a.name()];
    info.name = a.name();
    info.arities.insert(a.args().size());
    if (a.args().size() != 1) continue;
    auto lin = linearize(a.args()[0]);
    if (!lin) continue;  // nested application; reported by validate()
    bool seen = false;
    for (std::size_t i : info.qterms) seen = seen || p.qterms[i].app == a;
    if (seen) continue;
    QTerm t;
    t.index = p.qterms.size();
    t.fsym = a.name();
    t.coeff = lin->var_coeff(p.var);
    t.offset = lin->without_var(p.var);
    t.original = a.args()[0];
    t.app = a;
    t.id = to_string(substitute(a, p.var, Term::var("x")));
    if (!info.coeff_) info.coeff_ = t.coeff;
    info.qterms.push_back(t.index);
    p.qterms.push_back(std::move(t));
  }
}

}  // namespace

FragmentProblem decompose(const Formula& phi) {
  std::vector<Formula> conjuncts;
  flatten_conjunction(phi, conjuncts);

  FragmentProblem p;
  std::vector<Formula> ground;
  std::optional<Formula> quantified;
  for (const auto& c : conjuncts) {
    if (c.kind() == Formula::Kind::Forall) {
      if (quantified)
        throw FragmentError(K::MultipleQuantifiedConjuncts, "", {to_string(*quantified), to_string(c)},
                            "more than one universally quantified conjunct");
      quantified = c;
    } else if (has_quantifier(c)) {
      throw FragmentError(K::NestedQuantifier, "", {to_string(c)},
                          "quantifiers are only supported as a top-level universal conjunct");
    } else {
      ground.push_back(c);
    }
  }
  p.F = conjoin(ground);
  if (quantified) {
    p.has_quantifier = true;
    p.var = quantified->name();
    Formula body = quantified->body();
    if (body.kind() == Formula::Kind::Forall)
      throw FragmentError(K::MultipleQuantifiedVariables, "", {to_string(*quantified)},
                          "only one quantified variable is supported; formulas over several "
                          "variables must first be reduced by a change of variables");
    if (has_quantifier(body))
      throw FragmentError(K::NestedQuantifier, "", {to_string(body)},
                          "the quantified body must be quantifier-free");
    if (auto g = extract_guard(body, p.var)) {
      p.guard = g->first;
      p.Q = g->second;
    } else {
      p.Q = body;
    }
  }

  Symbols syms;
  collect_symbols(p.F, syms);
  collect_symbols(p.Q, syms, {p.var});
  p.consts = syms.int_consts;
  record_f_apps(p);
  record_q_apps(p);
  return p;
}

namespace {

void check_arguments(const Formula& f, const std::string& where) {
  std::vector<Term> apps;
  collect_apps(f, apps);
  for (const auto& a : apps) {
    for (const auto& arg : a.args()) {
      std::vector<Term> nested;
      collect_apps(arg, nested);
      if (!nested.empty())
        throw FragmentError(K::NestedFunctionArgument, a.name(), {to_string(a)},
                            "argument of '" + a.name() + "' in " + where +
                                " contains a function application: " + to_string(a));
    }
  }
}

}  // namespace

void validate(const FragmentProblem& p) {
  Symbols f_syms = symbols_of(p.F);
  if (!f_syms.free_vars.empty())
    throw FragmentError(K::VariableOutsideQuantifier, *f_syms.free_vars.begin(), {},
                        "variable '" + *f_syms.free_vars.begin() + "' occurs outside the quantifier");
  Symbols q_syms;
  collect_symbols(p.Q, q_syms, {p.var});
  if (!q_syms.free_vars.empty())
    throw FragmentError(K::VariableOutsideQuantifier, *q_syms.free_vars.begin(), {},
                        "variable '" + *q_syms.free_vars.begin() + "' is not bound by the quantifier");

  for (const auto& [name, info] : p.funcs) {
    if (info.arities.size() > 1 || *info.arities.begin() > 1)
      throw FragmentError(K::ArityTooHigh, name, {},
                          "function '" + name + "' has arity " +
                              std::to_string(*info.arities.rbegin()) + "; at most 1 is supported");
  }
  check_arguments(p.F, "the ground part");
  check_arguments(p.Q, "the quantified part");

  for (const auto& [name, info] : p.funcs) {
    std::set<Int> coeffs;
    std::vector<std::string> terms;
    for (std::size_t i : info.qterms) {
      coeffs.insert(p.qterms[i].coeff);
      terms.push_back(to_string(p.qterms[i].app));
    }
    if (coeffs.size() > 1) {
      std::string list;
      for (const auto& c : coeffs) list += (list.empty() ? "" : ", ") + c.str();
      throw FragmentError(K::NonUniformCoefficient, name, terms,
                          "arguments of '" + name +
                              "' have different coefficients of the quantified variable {" + list + "}");
    }
  }
}

FragmentProblem analyze(const Formula& phi) {
  FragmentProblem p = decompose(phi);
  validate(p);
  return p;
}

Formula recompose(const FragmentProblem& p) {
  std::vector<Formula> parts;
  flatten_conjunction(p.F, parts);
  if (p.has_quantifier) {
    Formula body = p.guard.kind == Guard::Kind::Unbounded
                       ? p.Q
                       : Formula::implies(p.guard.as_formula(p.var), p.Q);
    parts.push_back(Formula::forall(p.var, body));
  }
  return conjoin(parts);
}

Int eval_offset(const QTerm& t, const CellInterpretation& I) {
  auto v = eval_ground(to_term(t.offset), I);
  if (!v) {
    std::string missing;
    for (const auto& [c, k] : t.offset.consts)
      if (!I.defines(Cell::constant(c))) missing = c;
    throw FragmentError(K::UndefinedOffset, missing, {t.id},
                        "offset of " + t.id + " is undefined: constant '" + missing + "' has no value");
  }
  return *v;
}

Cell cell_at(const QTerm& t, const CellInterpretation& I, const Int& z) {
  return Cell::app(t.fsym, t.coeff * z + eval_offset(t, I));
}

std::set<Cell> relevant_cells(const FragmentProblem& p, const CellInterpretation& I, const Int& z) {
  std::set<Cell> out;
  for (const auto& t : p.qterms) out.insert(cell_at(t, I, z));
  return out;
}

}  // namespace indcert
