#include "mutations.hpp"

#include "indcert/encoder.hpp"

namespace indcert::test {

const char* to_string(Mutation m) {
  switch (m) {
    case Mutation::ShrinkInterval: return "shrink-interval";
    case Mutation::SwapSelected: return "swap-selected";
    case Mutation::PerturbCell: return "perturb-cell";
    case Mutation::DropDirection: return "drop-direction";
  }
  return "?";
}

std::vector<Mutation> all_mutations() {
  return {Mutation::ShrinkInterval, Mutation::SwapSelected, Mutation::PerturbCell, Mutation::DropDirection};
}

bool base_holds(const FragmentProblem& p, const Certificate& c) {
  if (eval_formula(p.F, c.interpretation) != Truth::True) return false;
  if (!p.has_quantifier) return true;
  for (Int z = c.interval.lo; z <= c.interval.hi; ++z) {
    if (!p.guard.contains(z)) continue;
    if (eval_formula(substitute(p.Q, p.var, Term::num(z)), c.interpretation) != Truth::True) return false;
  }
  return true;
}

namespace {

const char* dir(Sign s) { return s == Sign::Plus ? "up" : "down"; }

/// Offset value of a QTerm at x := 0 under the certificate's constants.
Int offset_value(const QTerm& t, const Certificate& c) {
  Int v = t.offset.constant;
  for (const auto& [name, k] : t.offset.consts) v += k * *c.interpretation.get(Cell::constant(name));
  return v;
}

/// Whether some ground argument a of f in F is not strictly before
/// t[x := bound] in direction sign(f)*s.
bool clash_fails(const FragmentProblem& p, const Certificate& c, Sign s, const std::vector<std::string>& ids,
                 const Int& bound) {
  for (const auto& id : ids) {
    const QTerm& t = p.qterm(*p.find_qterm(id));
    const FunctionInfo& f = p.func(t.fsym);
    Int at = t.coeff * bound + offset_value(t, c);
    bool up = (f.sign() * s) == Sign::Plus;
    for (const auto& a : f.f_args) {
      auto av = eval_ground(a, c.interpretation);
      if (!av) continue;
      if (up ? !(*av < at) : !(*av > at)) return true;
    }
  }
  return false;
}

std::optional<Mutant> shrink(const FragmentProblem& p, const Certificate& c) {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& sel = c.selection(s);
    if (!sel) continue;
    Interval b = c.interval;
    while (b.lo < b.hi) {
      if (s == Sign::Plus)
        --b.hi;
      else
        ++b.lo;
      if (clash_fails(p, c, s, *sel, b.bound(s))) {
        Mutant m{c, std::string("clash-") + dir(s), "interval " + to_string(c.interval) + " -> " + to_string(b)};
        m.cert.interval = b;
        // cells only the dropped instances touched would be flagged as
        // stray; keep the mutation about the clash bound alone
        CellInterpretation kept;
        for (const auto& [cell, v] : c.interpretation) {
          bool keep = !cell.arg;
          if (!keep) {
            std::vector<Term> apps;
            collect_apps(p.F, apps);
            for (const auto& a : apps)
              keep = keep || (a.name() == cell.symbol && eval_ground(a.args()[0], c.interpretation) == cell.arg);
            for (Int z = b.lo; !keep && z <= b.hi; ++z)
              if (p.guard.contains(z)) keep = relevant_cells(p, c.constants(), z).count(cell) != 0;
          }
          if (keep) kept.set(cell, v);
        }
        m.cert.interpretation = kept;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<Mutant> swap(const FragmentProblem& p, const Certificate& c) {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& sel = c.selection(s);
    if (!sel) continue;
    for (std::size_t k = 0; k < sel->size(); ++k) {
      const QTerm& t = p.qterm(*p.find_qterm((*sel)[k]));
      for (std::size_t i : p.func(t.fsym).qterms) {
        const QTerm& other = p.qterm(i);
        if (std::find(sel->begin(), sel->end(), other.id) != sel->end()) continue;
        Mutant m{c, std::string("extremal-") + dir(s), std::string("select-") + dir(s) + " " + t.id + " -> " + other.id};
        (*m.cert.selection(s))[k] = other.id;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<Mutant> perturb(const FragmentProblem& p, const Certificate& c) {
  for (const auto& [cell, v] : c.interpretation) {
    if (!cell.arg) continue;
    Mutant m{c, "base", to_string(cell) + " " + v.str() + " -> " + Int(v + 1).str()};
    m.cert.interpretation.set(cell, v + 1);
    if (!base_holds(p, m.cert)) return m;
  }
  return std::nullopt;
}

std::optional<Mutant> drop(const FragmentProblem& p, const Certificate& c) {
  if (!p.has_quantifier) return std::nullopt;
  Sign s = p.guard.kind == Guard::Kind::Unbounded ? Sign::Minus : Sign::Plus;
  if (!c.selection(s)) return std::nullopt;
  Mutant m{c, "coverage", std::string("drop select-") + dir(s)};
  m.cert.selection(s).reset();
  return m;
}

}  // namespace

std::optional<Mutant> mutate(const FragmentProblem& p, const Certificate& c, Mutation m) {
  switch (m) {
    case Mutation::ShrinkInterval: return shrink(p, c);
    case Mutation::SwapSelected: return swap(p, c);
    case Mutation::PerturbCell: return perturb(p, c);
    case Mutation::DropDirection: return drop(p, c);
  }
  return std::nullopt;
}

}  // namespace indcert::test
