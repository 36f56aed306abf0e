#include "indcert/certificate.hpp"

#include "indcert/encoder.hpp"
#include "indcert/parser.hpp"

namespace indcert {

CellInterpretation Certificate::constants() const {
  CellInterpretation out;
  for (const auto& [cell, v] : interpretation)
    if (!cell.arg) out.set(cell, v);
  return out;
}

MalformedCertificate::MalformedCertificate(sexpr::Position pos, const std::string& message)
    : std::runtime_error("malformed certificate at " + sexpr::to_string(pos) + ": " + message), pos_(pos) {}

namespace {

std::string selection_field(const char* name, const std::vector<std::string>& ids) {
  std::string out = std::string("(") + name;
  for (const auto& id : ids) out += " " + id;
  return out + ")";
}

}  // namespace

std::string serialize(const Certificate& c) {
  std::vector<std::string> fields;
  fields.push_back("(interval " + c.interval.lo.str() + " " + c.interval.hi.str() + ")");
  switch (c.guard.kind) {
    case Guard::Kind::Unbounded: fields.push_back("(guard none)"); break;
    case Guard::Kind::LowerBounded: fields.push_back("(guard (lower " + c.guard.lo.str() + "))"); break;
    case Guard::Kind::DoublyBounded:
      fields.push_back("(guard (bounded " + c.guard.lo.str() + " " + c.guard.hi.str() + "))");
      break;
  }
  std::string consts = "(consts";
  std::string cells = "(cells";
  for (const auto& [cell, v] : c.interpretation) {
    if (cell.arg)
      cells += " ((" + cell.symbol + " " + cell.arg->str() + ") " + v.str() + ")";
    else
      consts += " (" + cell.symbol + " " + v.str() + ")";
  }
  fields.push_back(consts + ")");
  fields.push_back(cells + ")");
  if (c.sel_up) fields.push_back(selection_field("select-up", *c.sel_up));
  if (c.sel_down) fields.push_back(selection_field("select-down", *c.sel_down));
  if (c.solver) {
    std::string quoted;
    for (char ch : *c.solver) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    fields.push_back("(solver \"" + quoted + "\")");
  }
  std::string out = "(certificate";
  for (const auto& f : fields) out += " " + f;
  return out + " )";
}

namespace {

using sexpr::SExpr;

[[noreturn]] void malformed(const SExpr& at, const std::string& msg) { throw MalformedCertificate(at.pos, msg); }

Int integer(const SExpr& e) {
  if (e.is_numeral()) return parse_int(e.text);
  if (e.is_atom() && e.text.size() > 1 && e.text[0] == '-') {
    SExpr digits = e;
    digits.text = e.text.substr(1);
    if (digits.is_numeral()) return -parse_int(digits.text);
  }
  if (e.is_call("-") && e.items.size() == 2 && e.items[1].is_numeral()) return -parse_int(e.items[1].text);
  malformed(e, "expected an integer, found '" + sexpr::to_string(e) + "'");
}

const SExpr& field(const SExpr& cert, std::size_t& next, const char* name, bool optional = false) {
  static const SExpr none;
  if (next >= cert.items.size() || !cert.items[next].is_call(name)) {
    if (optional) return none;
    const SExpr& at = next < cert.items.size() ? cert.items[next] : cert;
    malformed(at, std::string("expected field '") + name + "'");
  }
  return cert.items[next++];
}

std::vector<std::string> selection(const SExpr& f) {
  std::vector<std::string> ids;
  for (std::size_t i = 1; i < f.items.size(); ++i) {
    const SExpr& app = f.items[i];
    if (!app.is_list() || app.items.size() != 2 || !app.items[0].is_atom())
      malformed(app, "expected a function application");
    ids.push_back(sexpr::to_string(f.items[i]));
  }
  return ids;
}

}  // namespace

Certificate deserialize(std::string_view text) {
  std::vector<SExpr> data;
  try {
    data = sexpr::read_all(text);
  } catch (const sexpr::SyntaxError& e) {
    throw MalformedCertificate(e.position(), e.what());
  }
  if (data.size() != 1) throw MalformedCertificate({}, "expected exactly one (certificate ...) form");
  const SExpr& cert = data[0];
  if (!cert.is_call("certificate")) malformed(cert, "expected (certificate ...)");

  Certificate c;
  std::size_t next = 1;
  const SExpr& interval = field(cert, next, "interval");
  if (interval.items.size() != 3) malformed(interval, "interval needs two bounds");
  c.interval = {integer(interval.items[1]), integer(interval.items[2])};
  if (c.interval.lo > c.interval.hi) malformed(interval, "empty interval");

  const SExpr& guard = field(cert, next, "guard");
  if (guard.items.size() != 2) malformed(guard, "guard needs one value");
  const SExpr& g = guard.items[1];
  if (g.is_atom("none")) {
    c.guard = Guard::unbounded();
  } else if (g.is_call("lower") && g.items.size() == 2) {
    c.guard = Guard::lower(integer(g.items[1]));
  } else if (g.is_call("bounded") && g.items.size() == 3) {
    c.guard = Guard::bounded(integer(g.items[1]), integer(g.items[2]));
  } else {
    malformed(g, "unknown guard");
  }

  const SExpr& consts = field(cert, next, "consts");
  for (std::size_t i = 1; i < consts.items.size(); ++i) {
    const SExpr& e = consts.items[i];
    if (!e.is_list() || e.items.size() != 2 || !e.items[0].is_atom()) malformed(e, "expected (name value)");
    Cell cell = Cell::constant(e.items[0].text);
    if (c.interpretation.defines(cell)) malformed(e, "constant defined twice");
    c.interpretation.set(cell, integer(e.items[1]));
  }
  const SExpr& cells = field(cert, next, "cells");
  for (std::size_t i = 1; i < cells.items.size(); ++i) {
    const SExpr& e = cells.items[i];
    if (!e.is_list() || e.items.size() != 2 || !e.items[0].is_list() || e.items[0].items.size() != 2 ||
        !e.items[0].items[0].is_atom())
      malformed(e, "expected ((f n) value)");
    Cell cell = Cell::app(e.items[0].items[0].text, integer(e.items[0].items[1]));
    if (c.interpretation.defines(cell)) malformed(e, "cell defined twice");
    c.interpretation.set(cell, integer(e.items[1]));
  }
  if (const SExpr& up = field(cert, next, "select-up", true); up.is_list()) c.sel_up = selection(up);
  if (const SExpr& down = field(cert, next, "select-down", true); down.is_list()) c.sel_down = selection(down);
  if (const SExpr& solver = field(cert, next, "solver", true); solver.is_list()) {
    if (solver.items.size() != 2 || solver.items[1].kind != SExpr::Kind::String)
      malformed(solver, "expected (solver \"...\")");
    c.solver = solver.items[1].text;
  }
  if (next != cert.items.size()) malformed(cert.items[next], "unexpected field");
  return c;
}

std::optional<std::set<std::size_t>> resolve_selection(const FragmentProblem& p,
                                                       const std::vector<std::string>& ids) {
  std::set<std::size_t> out;
  for (const auto& id : ids) {
    std::optional<std::size_t> found = p.find_qterm(id);
    if (!found) {
      // tolerate spelling differences: compare symbol and linear argument
      try {
        Term t = parse_term(id, {"x"});
        if (t.is_app() && t.args().size() == 1) {
          auto arg = linearize(t.args()[0]);
          for (const auto& q : p.qterms) {
            if (q.fsym != t.name() || !arg) continue;
            auto mine = linearize(substitute(q.original, p.var, Term::var("x")));
            if (mine && *mine == *arg) found = q.index;
          }
        }
      } catch (const std::exception&) {
      }
    }
    if (!found) return std::nullopt;
    out.insert(*found);
  }
  return out;
}

bool Verdict::failed(const std::string& obligation) const {
  for (const auto& f : failures)
    if (f.obligation == obligation) return true;
  return false;
}

namespace {

const char* suffix(Sign s) { return s == Sign::Plus ? "-up" : "-down"; }

}  // namespace

Verdict check(const FragmentProblem& p, const Certificate& c, const SolverConfig& cfg) {
  Verdict v;
  auto fail = [&](const std::string& id, const std::string& msg) { v.failures.push_back({id, msg}); };

  // well-formedness: everything the remaining obligations rely on
  bool usable = true;
  if (c.interval.lo > c.interval.hi) {
    fail("well-formed", "empty interval " + to_string(c.interval));
    usable = false;
  }
  if (!(c.guard == p.guard))
    fail("well-formed", "guard " + to_string(c.guard) + " does not match the problem's " + to_string(p.guard));
  CellInterpretation consts = c.constants();
  for (const auto& t : p.qterms)
    for (const auto& [name, k] : t.offset.consts)
      if (!consts.defines(Cell::constant(name))) {
        fail("well-formed", "constant '" + name + "' in the argument of " + t.id + " has no value");
        usable = false;
      }
  std::optional<std::set<std::size_t>> selected[2];
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& sel = c.selection(s);
    if (!sel) continue;
    selected[s == Sign::Plus ? 0 : 1] = resolve_selection(p, *sel);
    if (!selected[s == Sign::Plus ? 0 : 1]) {
      std::string list;
      for (const auto& id : *sel) list += " " + id;
      fail("well-formed", std::string("selection") + suffix(s) + " names terms that do not occur:" + list);
    }
  }
  if (!usable) return v;

  // def(I) may only hold cells the base conjunction touches; anything else
  // would pre-empt propagation
  std::set<Cell> touched;
  {
    std::vector<Term> apps;
    collect_apps(p.F, apps);
    for (const auto& a : apps)
      if (a.args().size() == 1)
        if (auto n = eval_ground(a.args()[0], consts)) touched.insert(Cell::app(a.name(), *n));
    if (p.has_quantifier)
      for (Int z = c.interval.lo; z <= c.interval.hi; ++z)
        if (p.guard.contains(z))
          for (const auto& cell : relevant_cells(p, consts, z)) touched.insert(cell);
  }
  for (const auto& [cell, value] : c.interpretation) {
    if (!cell.arg) continue;
    if (!touched.count(cell))
      fail("well-formed", "cell " + to_string(cell) + " is not touched by the ground part or an instance in " +
                              to_string(c.interval));
  }

  // base: F and the instances over B within the guard, by pure evaluation
  std::vector<Formula> base = {p.F};
  if (p.has_quantifier)
    for (Int z = c.interval.lo; z <= c.interval.hi; ++z)
      if (p.guard.contains(z)) base.push_back(instantiate_q(p, z));
  for (const auto& f : base) {
    Truth t = eval_formula(f, c.interpretation);
    if (t != Truth::True) {
      fail("base", to_string(f) + " evaluates to " + indcert::to_string(t));
      break;
    }
  }

  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto& sel = selected[s == Sign::Plus ? 0 : 1];
    if (!sel) continue;
    SubsetPattern pattern{s, *sel};
    Formula ext = extremal(p, pattern);
    if (eval_formula(ext, consts) != Truth::True)
      fail(std::string("extremal") + suffix(s), to_string(ext) + " does not hold");
    Formula cl = clash(p, pattern, c.interval);
    if (eval_formula(cl, consts) != Truth::True)
      fail(std::string("clash") + suffix(s), to_string(cl) + " does not hold");
    Formula prop = map_consts(propagability(p, *sel), [&](const Term& k) {
      auto val = consts.get(Cell::constant(k.name()));
      return val ? Term::num(*val) : k;
    });
    std::string outcome;
    try {
      Validity r = check_validity(cfg, prop);
      if (r != Validity::Valid) outcome = std::string("solver reports ") + to_string(r);
    } catch (const SolverError& e) {
      outcome = e.what();
    }
    if (!outcome.empty()) fail(std::string("propagability") + suffix(s), to_string(prop) + ": " + outcome);
  }

  // coverage: every instantiation outside B must be reached by propagation
  if (p.has_quantifier) {
    bool up = c.sel_up.has_value();
    bool down = c.sel_down.has_value();
    switch (p.guard.kind) {
      case Guard::Kind::Unbounded:
        if (!up || !down) fail("coverage", "unbounded quantifier needs both propagation directions");
        break;
      case Guard::Kind::LowerBounded:
        if (c.interval.lo != p.guard.lo)
          fail("coverage", "interval must start at the guard bound " + p.guard.lo.str());
        if (!up) fail("coverage", "upward propagation is missing");
        break;
      case Guard::Kind::DoublyBounded: {
        bool covered = c.interval.lo <= p.guard.lo && p.guard.hi <= c.interval.hi;
        if (!covered) {
          if (c.interval.lo != p.guard.lo)
            fail("coverage", "interval must start at the guard bound " + p.guard.lo.str());
          if (!up) fail("coverage", "interval does not cover the guard range and upward propagation is missing");
        }
        break;
      }
    }
  }
  return v;
}

}  // namespace indcert
