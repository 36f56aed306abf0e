#include "indcert/ast.hpp"

#include <sstream>
#include <stdexcept>

namespace indcert {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  Int v(std::string(text.substr(start)));
  return text[0] == '-' ? Int(-v) : v;
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind;
  Int value;
  std::string name;
  std::vector<Term> children;
};

Term Term::num(Int value) {
  return Term(std::make_shared<const Node>(Node{Kind::IntConst, std::move(value), {}, {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Const, 0, std::move(name), {}}));
}

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, 0, std::move(name), {}}));
}

Term Term::add(Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Add, 0, {}, {std::move(lhs), std::move(rhs)}}));
}

Term Term::mul(Int coeff, Term t) {
  if (t.is_num()) return num(coeff * t.value());
  return Term(std::make_shared<const Node>(Node{Kind::Mul, std::move(coeff), {}, {std::move(t)}}));
}

Term Term::neg(Term t) {
  if (t.is_num()) return num(-t.value());
  return Term(std::make_shared<const Node>(Node{Kind::Neg, 0, {}, {std::move(t)}}));
}

Term Term::app(std::string fsym, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::App, 0, std::move(fsym), std::move(args)}));
}

Term Term::app(std::string fsym, Term arg) {
  return app(std::move(fsym), std::vector<Term>{std::move(arg)});
}

Term::Kind Term::kind() const { return node_->kind; }
const Int& Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::lhs() const { return node_->children.at(0); }
const Term& Term::rhs() const { return node_->children.at(1); }
const Term& Term::operand() const { return node_->children.at(0); }
const std::vector<Term>& Term::args() const { return node_->children; }

namespace {

int compare(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::IntConst:
    case Term::Kind::Mul:
      if (a.value() != b.value()) return a.value() < b.value() ? -1 : 1;
      break;
    case Term::Kind::Const:
    case Term::Kind::Var:
    case Term::Kind::App:
      if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
      break;
    default:
      break;
  }
  const auto& xs = a.args();
  const auto& ys = b.args();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (int c = compare(xs[i], ys[i]); c != 0) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  return a.node_ == b.node_ || compare(a, b) == 0;
}

bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// ---------------------------------------------------------------------------
// Formula

const char* to_string(Rel rel) {
  switch (rel) {
    case Rel::Eq: return "=";
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Ne: return "distinct";
  }
  return "?";
}

struct Formula::Node {
  Kind kind;
  Rel rel = Rel::Eq;
  std::vector<Term> terms;
  std::string name;
  std::vector<Formula> parts;
};

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::True, Rel::Eq, {}, {}, {}}));
  return t;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, Rel::Eq, {}, {}, {}}));
  return f;
}

Formula Formula::atom(Rel rel, Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, rel, {std::move(lhs), std::move(rhs)}, {}, {}}));
}

Formula Formula::prop(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Prop, Rel::Eq, {}, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
  if (f.kind() == Kind::Atom && f.rel() == Rel::Eq)
    return atom(Rel::Ne, f.lhs_term(), f.rhs_term());
  return Formula(std::make_shared<const Node>(Node{Kind::Not, Rel::Eq, {}, {}, {std::move(f)}}));
}

Formula Formula::conj(std::vector<Formula> parts) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, Rel::Eq, {}, {}, std::move(parts)}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, Rel::Eq, {}, {}, std::move(parts)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, Rel::Eq, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Forall, Rel::Eq, {}, std::move(var), {std::move(body)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Exists, Rel::Eq, {}, std::move(var), {std::move(body)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Rel Formula::rel() const { return node_->rel; }
const Term& Formula::lhs_term() const { return node_->terms.at(0); }
const Term& Formula::rhs_term() const { return node_->terms.at(1); }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Formula>& Formula::parts() const { return node_->parts; }
const Formula& Formula::body() const { return node_->parts.at(0); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a.rel() == b.rel() && a.lhs_term() == b.lhs_term() && a.rhs_term() == b.rhs_term();
    case Formula::Kind::Prop:
      return a.name() == b.name();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (a.name() != b.name()) return false;
      break;
    default:
      break;
  }
  return a.parts() == b.parts();
}

Formula conjoin(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::truth();
  if (parts.size() == 1) return parts.front();
  return Formula::conj(std::move(parts));
}

Formula disjoin(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::falsity();
  if (parts.size() == 1) return parts.front();
  return Formula::disj(std::move(parts));
}

// ---------------------------------------------------------------------------
// Printing

std::string int_to_smtlib(const Int& v) {
  if (v < 0) return "(- " + Int(-v).str() + ")";
  return v.str();
}

namespace {

void print(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::IntConst:
      os << int_to_smtlib(t.value());
      return;
    case Term::Kind::Const:
    case Term::Kind::Var:
      os << t.name();
      return;
    case Term::Kind::Add:
      os << "(+ ";
      print(os, t.lhs());
      os << ' ';
      print(os, t.rhs());
      os << ')';
      return;
    case Term::Kind::Mul:
      os << "(* " << int_to_smtlib(t.value()) << ' ';
      print(os, t.operand());
      os << ')';
      return;
    case Term::Kind::Neg:
      os << "(- ";
      print(os, t.operand());
      os << ')';
      return;
    case Term::Kind::App:
      os << '(' << t.name();
      for (const auto& a : t.args()) {
        os << ' ';
        print(os, a);
      }
      os << ')';
      return;
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      os << "true";
      return;
    case Formula::Kind::False:
      os << "false";
      return;
    case Formula::Kind::Atom:
      if (f.rel() == Rel::Ne) {
        os << "(not (= ";
        print(os, f.lhs_term());
        os << ' ';
        print(os, f.rhs_term());
        os << "))";
        return;
      }
      os << '(' << to_string(f.rel()) << ' ';
      print(os, f.lhs_term());
      os << ' ';
      print(os, f.rhs_term());
      os << ')';
      return;
    case Formula::Kind::Prop:
      os << f.name();
      return;
    case Formula::Kind::Not:
      os << "(not ";
      print(os, f.body());
      os << ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* op = f.kind() == Formula::Kind::And ? "and"
                       : f.kind() == Formula::Kind::Or ? "or"
                                                        : "=>";
      os << '(' << op;
      for (const auto& p : f.parts()) {
        os << ' ';
        print(os, p);
      }
      os << ')';
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << (f.kind() == Formula::Kind::Forall ? "(forall ((" : "(exists ((") << f.name()
         << " Int)) ";
      print(os, f.body());
      os << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

// ---------------------------------------------------------------------------
// Substitution and traversal

namespace {

template <class Fn>
Term rebuild(const Term& t, Fn&& leaf) {
  switch (t.kind()) {
    case Term::Kind::IntConst:
    case Term::Kind::Const:
    case Term::Kind::Var:
      return leaf(t);
    case Term::Kind::Add:
      return Term::add(rebuild(t.lhs(), leaf), rebuild(t.rhs(), leaf));
    case Term::Kind::Mul:
      return Term::mul(t.value(), rebuild(t.operand(), leaf));
    case Term::Kind::Neg:
      return Term::neg(rebuild(t.operand(), leaf));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(rebuild(a, leaf));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

template <class TermFn>
Formula rebuild(const Formula& f, TermFn&& on_term, const std::string* shadow_var = nullptr) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Prop:
      return f;
    case Formula::Kind::Atom:
      return Formula::atom(f.rel(), on_term(f.lhs_term()), on_term(f.rhs_term()));
    case Formula::Kind::Not:
      return Formula::negation(rebuild(f.body(), on_term, shadow_var));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      std::vector<Formula> parts;
      parts.reserve(f.parts().size());
      for (const auto& p : f.parts()) parts.push_back(rebuild(p, on_term, shadow_var));
      if (f.kind() == Formula::Kind::And) return Formula::conj(std::move(parts));
      if (f.kind() == Formula::Kind::Or) return Formula::disj(std::move(parts));
      return Formula::implies(parts[0], parts[1]);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (shadow_var && f.name() == *shadow_var) return f;
      Formula body = rebuild(f.body(), on_term, shadow_var);
      return f.kind() == Formula::Kind::Forall ? Formula::forall(f.name(), body)
                                                : Formula::exists(f.name(), body);
    }
  }
  return f;
}

}  // namespace

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  return rebuild(t, [&](const Term& leaf) {
    return leaf.kind() == Term::Kind::Var && leaf.name() == var ? replacement : leaf;
  });
}

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  return rebuild(
      f, [&](const Term& t) { return substitute(t, var, replacement); }, &var);
}

Term map_apps(const Term& t, const std::function<Term(const Term&)>& fn) {
  switch (t.kind()) {
    case Term::Kind::Add:
      return Term::add(map_apps(t.lhs(), fn), map_apps(t.rhs(), fn));
    case Term::Kind::Mul:
      return Term::mul(t.value(), map_apps(t.operand(), fn));
    case Term::Kind::Neg:
      return Term::neg(map_apps(t.operand(), fn));
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(map_apps(a, fn));
      return fn(Term::app(t.name(), std::move(args)));
    }
    default:
      return t;
  }
}

Formula map_apps(const Formula& f, const std::function<Term(const Term&)>& fn) {
  return rebuild(f, [&](const Term& t) { return map_apps(t, fn); });
}

Formula map_consts(const Formula& f, const std::function<Term(const Term&)>& fn) {
  return rebuild(f, [&](const Term& t) {
    return rebuild(t, [&](const Term& leaf) {
      return leaf.kind() == Term::Kind::Const ? fn(leaf) : leaf;
    });
  });
}

void collect_symbols(const Term& t, Symbols& out, const std::set<std::string>& bound) {
  switch (t.kind()) {
    case Term::Kind::IntConst:
      return;
    case Term::Kind::Const:
      out.int_consts.insert(t.name());
      return;
    case Term::Kind::Var:
      if (!bound.count(t.name())) out.free_vars.insert(t.name());
      return;
    case Term::Kind::App:
      out.functions[t.name()] = t.args().size();
      [[fallthrough]];
    default:
      for (const auto& a : t.args()) collect_symbols(a, out, bound);
  }
}

void collect_symbols(const Formula& f, Symbols& out, const std::set<std::string>& bound) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Atom:
      collect_symbols(f.lhs_term(), out, bound);
      collect_symbols(f.rhs_term(), out, bound);
      return;
    case Formula::Kind::Prop:
      out.props.insert(f.name());
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto inner = bound;
      inner.insert(f.name());
      collect_symbols(f.body(), out, inner);
      return;
    }
    default:
      for (const auto& p : f.parts()) collect_symbols(p, out, bound);
  }
}

Symbols symbols_of(const Formula& f) {
  Symbols s;
  collect_symbols(f, s);
  return s;
}

void collect_apps(const Term& t, std::vector<Term>& out) {
  if (t.is_app()) out.push_back(t);
  for (const auto& a : t.args()) collect_apps(a, out);
}

void collect_apps(const Formula& f, std::vector<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      collect_apps(f.lhs_term(), out);
      collect_apps(f.rhs_term(), out);
      return;
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Prop:
      return;
    default:
      for (const auto& p : f.parts()) collect_apps(p, out);
  }
}

bool contains_var(const Term& t, const std::string& var) {
  if (t.kind() == Term::Kind::Var) return t.name() == var;
  for (const auto& a : t.args())
    if (contains_var(a, var)) return true;
  return false;
}

bool is_quantifier_free(const Formula& f) {
  if (f.kind() == Formula::Kind::Forall || f.kind() == Formula::Kind::Exists) return false;
  for (const auto& p : f.parts())
    if (!is_quantifier_free(p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Linear normal form

Int LinearTerm::var_coeff(const std::string& var) const {
  auto it = vars.find(var);
  return it == vars.end() ? Int(0) : it->second;
}

LinearTerm LinearTerm::without_var(const std::string& var) const {
  LinearTerm out = *this;
  out.vars.erase(var);
  return out;
}

namespace {

void add_scaled(LinearTerm& acc, const LinearTerm& t, const Int& k) {
  acc.constant += k * t.constant;
  for (const auto& [n, c] : t.vars) {
    Int& slot = acc.vars[n];
    slot += k * c;
    if (slot == 0) acc.vars.erase(n);
  }
  for (const auto& [n, c] : t.consts) {
    Int& slot = acc.consts[n];
    slot += k * c;
    if (slot == 0) acc.consts.erase(n);
  }
}

}  // namespace

std::optional<LinearTerm> linearize(const Term& t) {
  LinearTerm out;
  switch (t.kind()) {
    case Term::Kind::IntConst:
      out.constant = t.value();
      return out;
    case Term::Kind::Const:
      out.consts[t.name()] = 1;
      return out;
    case Term::Kind::Var:
      out.vars[t.name()] = 1;
      return out;
    case Term::Kind::Add: {
      auto l = linearize(t.lhs());
      auto r = linearize(t.rhs());
      if (!l || !r) return std::nullopt;
      add_scaled(out, *l, 1);
      add_scaled(out, *r, 1);
      return out;
    }
    case Term::Kind::Mul:
    case Term::Kind::Neg: {
      auto inner = linearize(t.operand());
      if (!inner) return std::nullopt;
      add_scaled(out, *inner, t.kind() == Term::Kind::Mul ? t.value() : Int(-1));
      return out;
    }
    case Term::Kind::App:
      return std::nullopt;
  }
  return std::nullopt;
}

Term to_term(const LinearTerm& lt) {
  std::vector<Term> parts;
  auto scaled = [](const Int& k, Term t) { return k == 1 ? t : Term::mul(k, std::move(t)); };
  for (const auto& [n, k] : lt.vars) parts.push_back(scaled(k, Term::var(n)));
  for (const auto& [n, k] : lt.consts) parts.push_back(scaled(k, Term::constant(n)));
  if (lt.constant != 0 || parts.empty()) parts.push_back(Term::num(lt.constant));
  Term acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Term::add(acc, parts[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Cells

bool operator==(const Cell& a, const Cell& b) { return a.symbol == b.symbol && a.arg == b.arg; }

bool operator<(const Cell& a, const Cell& b) {
  if (a.symbol != b.symbol) return a.symbol < b.symbol;
  if (a.arg.has_value() != b.arg.has_value()) return !a.arg.has_value();
  return a.arg.has_value() && *a.arg < *b.arg;
}

std::string to_string(const Cell& c) {
  if (!c.arg) return c.symbol;
  return "(" + c.symbol + " " + int_to_smtlib(*c.arg) + ")";
}

Term to_term(const Cell& c) {
  if (!c.arg) return Term::constant(c.symbol);
  return Term::app(c.symbol, Term::num(*c.arg));
}

std::optional<Int> CellInterpretation::get(const Cell& cell) const {
  auto it = map_.find(cell);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Ground evaluation

namespace {

/// Partially evaluated term: constant plus opaque undefined pieces.
struct Symbolic {
  Int constant = 0;
  std::map<std::string, Int> residue;

  bool defined() const { return residue.empty(); }

  void add(const Symbolic& o, const Int& k) {
    constant += k * o.constant;
    for (const auto& [key, c] : o.residue) {
      Int& slot = residue[key];
      slot += k * c;
      if (slot == 0) residue.erase(key);
    }
  }
};

Symbolic opaque(std::string key) {
  Symbolic s;
  s.residue[std::move(key)] = 1;
  return s;
}

Symbolic eval_symbolic(const Term& t, const CellInterpretation& env) {
  Symbolic out;
  switch (t.kind()) {
    case Term::Kind::IntConst:
      out.constant = t.value();
      return out;
    case Term::Kind::Const:
      if (auto v = env.get(Cell::constant(t.name()))) {
        out.constant = *v;
        return out;
      }
      return opaque(t.name());
    case Term::Kind::Var:
      return opaque("?" + t.name());
    case Term::Kind::Add:
      out.add(eval_symbolic(t.lhs(), env), 1);
      out.add(eval_symbolic(t.rhs(), env), 1);
      return out;
    case Term::Kind::Mul:
      out.add(eval_symbolic(t.operand(), env), t.value());
      return out;
    case Term::Kind::Neg:
      out.add(eval_symbolic(t.operand(), env), -1);
      return out;
    case Term::Kind::App: {
      if (t.args().size() == 1) {
        Symbolic arg = eval_symbolic(t.args()[0], env);
        if (arg.defined()) {
          Cell cell = Cell::app(t.name(), arg.constant);
          if (auto v = env.get(cell)) {
            out.constant = *v;
            return out;
          }
          return opaque(to_string(cell));
        }
      }
      return opaque(to_string(t));
    }
  }
  return out;
}

bool compare(Rel rel, const Int& diff) {
  switch (rel) {
    case Rel::Eq: return diff == 0;
    case Rel::Ne: return diff != 0;
    case Rel::Le: return diff <= 0;
    case Rel::Lt: return diff < 0;
    case Rel::Ge: return diff >= 0;
    case Rel::Gt: return diff > 0;
  }
  return false;
}

Truth negate(Truth t) {
  if (t == Truth::True) return Truth::False;
  if (t == Truth::False) return Truth::True;
  return Truth::Undefined;
}

}  // namespace

std::optional<Int> eval_ground(const Term& t, const CellInterpretation& env) {
  Symbolic s = eval_symbolic(t, env);
  if (!s.defined()) return std::nullopt;
  return s.constant;
}

const char* to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Undefined: return "undefined";
  }
  return "?";
}

Truth eval_formula(const Formula& f, const CellInterpretation& env,
                   const std::map<std::string, bool>& props) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return Truth::True;
    case Formula::Kind::False:
      return Truth::False;
    case Formula::Kind::Atom: {
      Symbolic diff = eval_symbolic(f.lhs_term(), env);
      diff.add(eval_symbolic(f.rhs_term(), env), -1);
      if (!diff.defined()) return Truth::Undefined;
      return compare(f.rel(), diff.constant) ? Truth::True : Truth::False;
    }
    case Formula::Kind::Prop: {
      auto it = props.find(f.name());
      if (it == props.end()) return Truth::Undefined;
      return it->second ? Truth::True : Truth::False;
    }
    case Formula::Kind::Not:
      return negate(eval_formula(f.body(), env, props));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const Truth absorbing = f.kind() == Formula::Kind::And ? Truth::False : Truth::True;
      bool undefined = false;
      for (const auto& p : f.parts()) {
        Truth t = eval_formula(p, env, props);
        if (t == absorbing) return absorbing;
        if (t == Truth::Undefined) undefined = true;
      }
      return undefined ? Truth::Undefined : negate(absorbing);
    }
    case Formula::Kind::Implies: {
      Truth a = eval_formula(f.parts()[0], env, props);
      if (a == Truth::False) return Truth::True;
      Truth b = eval_formula(f.parts()[1], env, props);
      if (b == Truth::True) return Truth::True;
      if (a == Truth::True && b == Truth::False) return Truth::False;
      return Truth::Undefined;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw std::invalid_argument("eval_formula: quantified formula");
  }
  return Truth::Undefined;
}

}  // namespace indcert
