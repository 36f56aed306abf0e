#include "indcert/parser.hpp"

namespace indcert {

UnsupportedConstruct::UnsupportedConstruct(std::string construct, Position pos)
    : std::runtime_error(sexpr::to_string(pos) + ": unsupported construct '" + construct + "'"),
      construct_(std::move(construct)),
      pos_(pos) {}

bool is_reserved_symbol(std::string_view name) { return name.find('!') != std::string_view::npos; }

namespace {

using sexpr::SExpr;

bool is_bool_head(const std::string& s) {
  static const std::set<std::string> heads = {"and", "or",  "not", "=>", "=",  "distinct",
                                              "<=",  "<",   ">=",  ">",  "forall", "exists"};
  return heads.count(s) != 0;
}

class ScriptParser {
 public:
  Script& script() { return script_; }

  void command(const SExpr& cmd) {
    if (!cmd.is_list() || cmd.items.empty() || !cmd.items[0].is_atom())
      throw SyntaxError(cmd.pos, "expected a command");
    const std::string& head = cmd.items[0].text;
    if (head == "set-logic" || head == "set-info" || head == "set-option" || head == "check-sat" ||
        head == "exit") {
      return;
    }
    if (head == "declare-const") {
      expect_arity(cmd, 3);
      declare(cmd.items[1], 0, cmd);
      expect_int_sort(cmd.items[2]);
      return;
    }
    if (head == "declare-fun") {
      expect_arity(cmd, 4);
      const SExpr& domain = cmd.items[2];
      if (!domain.is_list()) throw SyntaxError(domain.pos, "expected a sort list");
      for (const auto& s : domain.items) expect_int_sort(s);
      expect_int_sort(cmd.items[3]);
      declare(cmd.items[1], domain.items.size(), cmd);
      return;
    }
    if (head == "assert") {
      expect_arity(cmd, 2);
      script_.assertions.push_back(formula(cmd.items[1], {}));
      return;
    }
    throw UnsupportedConstruct(head, cmd.pos);
  }

  Term term(const SExpr& e, const std::set<std::string>& bound) {
    if (e.kind == SExpr::Kind::String) throw UnsupportedConstruct("string literal", e.pos);
    if (e.is_atom()) {
      if (e.is_numeral()) return Term::num(parse_int(e.text));
      if (e.text == "true" || e.text == "false")
        throw SyntaxError(e.pos, "expected an integer term, found '" + e.text + "'");
      if (is_decimal(e.text)) throw UnsupportedConstruct("decimal " + e.text, e.pos);
      if (bound.count(e.text)) return Term::var(e.text);
      use_symbol(e, 0);
      return Term::constant(e.text);
    }
    if (e.items.empty()) throw SyntaxError(e.pos, "empty application");
    const SExpr& head = e.items[0];
    if (!head.is_atom()) throw SyntaxError(head.pos, "expected a function symbol");
    const std::string& op = head.text;
    if (op == "+") {
      if (e.items.size() < 2) throw SyntaxError(e.pos, "'+' needs an argument");
      Term acc = term(e.items[1], bound);
      for (std::size_t i = 2; i < e.items.size(); ++i) acc = Term::add(acc, term(e.items[i], bound));
      return acc;
    }
    if (op == "-") {
      if (e.items.size() < 2) throw SyntaxError(e.pos, "'-' needs an argument");
      Term first = term(e.items[1], bound);
      if (e.items.size() == 2) return Term::neg(first);
      Term acc = first;
      for (std::size_t i = 2; i < e.items.size(); ++i)
        acc = Term::add(acc, Term::neg(term(e.items[i], bound)));
      return acc;
    }
    if (op == "*") {
      if (e.items.size() < 3) throw SyntaxError(e.pos, "'*' needs two arguments");
      std::vector<Term> factors;
      for (std::size_t i = 1; i < e.items.size(); ++i) factors.push_back(term(e.items[i], bound));
      // exactly one non-numeral factor, or all numerals (the last one is the factor)
      std::optional<std::size_t> symbolic;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].is_num()) continue;
        if (symbolic) throw UnsupportedConstruct("non-linear multiplication", e.pos);
        symbolic = i;
      }
      std::size_t pick = symbolic.value_or(factors.size() - 1);
      Int coeff = 1;
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (i != pick) coeff *= factors[i].value();
      return Term::mul(coeff, factors[pick]);
    }
    if (op == "ite" || op == "let" || op == "div" || op == "mod" || op == "abs" || op == "select" ||
        op == "store" || op == "/" || op == "to_real")
      throw UnsupportedConstruct(op, head.pos);
    if (is_bool_head(op)) throw SyntaxError(e.pos, "expected an integer term, found a formula");
    if (bound.count(op)) throw SyntaxError(head.pos, "variable '" + op + "' applied as a function");
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i], bound));
    use_symbol(head, args.size());
    return Term::app(op, std::move(args));
  }

  Formula formula(const SExpr& e, const std::set<std::string>& bound) {
    if (e.is_atom()) {
      if (e.text == "true") return Formula::truth();
      if (e.text == "false") return Formula::falsity();
      throw SyntaxError(e.pos, "expected a formula, found '" + e.text + "'");
    }
    if (e.items.empty() || !e.items[0].is_atom()) throw SyntaxError(e.pos, "expected a formula");
    const std::string& op = e.items[0].text;
    auto subformulas = [&](std::size_t min) {
      if (e.items.size() < min + 1)
        throw SyntaxError(e.pos, "'" + op + "' needs at least " + std::to_string(min) + " argument(s)");
      std::vector<Formula> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(formula(e.items[i], bound));
      return parts;
    };
    if (op == "and") return Formula::conj(subformulas(1));
    if (op == "or") return Formula::disj(subformulas(1));
    if (op == "not") {
      expect_arity(e, 2);
      return Formula::negation(formula(e.items[1], bound));
    }
    if (op == "=>") {
      auto parts = subformulas(2);
      Formula acc = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::implies(parts[i], acc);
      return acc;
    }
    static const std::map<std::string, Rel> rels = {{"=", Rel::Eq},  {"<=", Rel::Le},
                                                    {"<", Rel::Lt},  {">=", Rel::Ge},
                                                    {">", Rel::Gt},  {"distinct", Rel::Ne}};
    if (auto it = rels.find(op); it != rels.end()) {
      if (e.items.size() != 3)
        throw UnsupportedConstruct("'" + op + "' with " + std::to_string(e.items.size() - 1) +
                                       " arguments",
                                   e.pos);
      return Formula::atom(it->second, term(e.items[1], bound), term(e.items[2], bound));
    }
    if (op == "forall" || op == "exists") {
      expect_arity(e, 3);
      const SExpr& binders = e.items[1];
      if (!binders.is_list() || binders.items.empty())
        throw SyntaxError(binders.pos, "expected a non-empty binder list");
      std::vector<std::string> vars;
      auto inner = bound;
      for (const auto& b : binders.items) {
        if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_atom())
          throw SyntaxError(b.pos, "expected (<symbol> <sort>)");
        expect_int_sort(b.items[1]);
        check_symbol_name(b.items[0]);
        vars.push_back(b.items[0].text);
        inner.insert(b.items[0].text);
      }
      Formula body = formula(e.items[2], inner);
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = op == "forall" ? Formula::forall(*it, body) : Formula::exists(*it, body);
      return body;
    }
    if (op == "let" || op == "ite" || op == "!" || op == "xor")
      throw UnsupportedConstruct(op, e.items[0].pos);
    throw SyntaxError(e.pos, "expected a formula, found application of '" + op + "'");
  }

 private:
  static bool is_decimal(const std::string& s) {
    auto dot = s.find('.');
    return dot != std::string::npos && dot > 0 && std::isdigit(static_cast<unsigned char>(s[0]));
  }

  static void expect_arity(const SExpr& e, std::size_t n) {
    if (e.items.size() != n)
      throw SyntaxError(e.pos, "'" + e.items[0].text + "' expects " + std::to_string(n - 1) +
                                   " argument(s)");
  }

  static void expect_int_sort(const SExpr& s) {
    if (s.is_atom("Int")) return;
    throw UnsupportedConstruct("sort " + sexpr::to_string(s), s.pos);
  }

  static void check_symbol_name(const SExpr& sym) {
    if (!sym.is_atom() || sym.text.empty()) throw SyntaxError(sym.pos, "expected a symbol");
    if (is_reserved_symbol(sym.text))
      throw UnsupportedConstruct("reserved symbol name '" + sym.text + "'", sym.pos);
  }

  void declare(const SExpr& sym, std::size_t arity, const SExpr& cmd) {
    check_symbol_name(sym);
    if (declared_.count(sym.text)) throw SyntaxError(cmd.pos, "symbol '" + sym.text + "' redeclared");
    if (auto it = used_.find(sym.text); it != used_.end() && it->second != arity)
      throw SyntaxError(cmd.pos, "symbol '" + sym.text + "' declared with arity " + std::to_string(arity) +
                                     " after use with " + std::to_string(it->second));
    declared_[sym.text] = arity;
    record(sym.text, arity);
  }

  void use_symbol(const SExpr& sym, std::size_t arity) {
    check_symbol_name(sym);
    if (auto it = declared_.find(sym.text); it != declared_.end() && it->second != arity)
      throw SyntaxError(sym.pos, "symbol '" + sym.text + "' declared with arity " +
                                     std::to_string(it->second) + ", used with " +
                                     std::to_string(arity));
    if (auto it = used_.find(sym.text); it != used_.end() && it->second != arity)
      throw SyntaxError(sym.pos, "symbol '" + sym.text + "' used with inconsistent arities");
    used_[sym.text] = arity;
    record(sym.text, arity);
  }

  void record(const std::string& name, std::size_t arity) {
    if (arity == 0)
      script_.constants.insert(name);
    else
      script_.functions[name] = arity;
  }

  Script script_;
  std::map<std::string, std::size_t> declared_;
  std::map<std::string, std::size_t> used_;
};

}  // namespace

Script parse_script(std::string_view text) {
  ScriptParser parser;
  for (const auto& cmd : sexpr::read_all(text)) parser.command(cmd);
  Script& s = parser.script();
  s.formula = s.assertions.size() == 1 ? s.assertions.front() : conjoin(s.assertions);
  return std::move(s);
}

Formula parse(std::string_view text) { return parse_script(text).formula; }

Term parse_term(std::string_view text, const std::set<std::string>& bound) {
  auto data = sexpr::read_all(text);
  if (data.size() != 1) throw SyntaxError({}, "expected exactly one term");
  ScriptParser parser;
  return parser.term(data[0], bound);
}

Formula parse_formula(std::string_view text, const std::set<std::string>& bound) {
  auto data = sexpr::read_all(text);
  if (data.size() != 1) throw SyntaxError({}, "expected exactly one formula");
  ScriptParser parser;
  return parser.formula(data[0], bound);
}

}  // namespace indcert
