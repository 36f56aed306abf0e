#include "indcert/backend.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "indcert/process.hpp"

namespace indcert {

const char* logic_name(Logic logic) { return logic == Logic::GroundUF ? "QF_UFLIA" : "LIA"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Sat: return "sat";
    case Status::Unsat: return "unsat";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "valid";
    case Validity::Invalid: return "invalid";
    case Validity::Unknown: return "unknown";
  }
  return "?";
}

SolverConfig SolverConfig::for_command(const std::string& command) {
  std::istringstream in(command);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  SolverConfig cfg;
  if (words.empty()) return cfg;
  cfg.executable = words[0];
  cfg.extra_args.assign(words.begin() + 1, words.end());
  if (cfg.extra_args.empty() && std::filesystem::path(cfg.executable).filename() == "z3")
    cfg.extra_args = {"-in"};
  return cfg;
}

SolverConfig SolverConfig::from_environment() {
  const char* env = std::getenv("INDCERT_SOLVER");
  if (env && *env) return for_command(env);
  return {};
}

std::string SolverConfig::describe() const {
  std::string out = executable;
  for (const auto& a : extra_args) out += " " + a;
  return out;
}

Session::Session(SolverConfig cfg, Logic logic) : cfg_(std::move(cfg)), logic_(logic) {
  try {
    child_ = std::make_unique<ChildProcess>(cfg_.executable, cfg_.extra_args);
  } catch (const ProcessError& e) {
    throw SolverCrashed(e.what());
  }
  declared_.emplace_back();
  scopes_.emplace_back();
  send("(set-option :produce-models true)\n(set-logic " + std::string(logic_name(logic_)) + ")\n");
}

Session::~Session() {
  if (!dead_ && child_) {
    try {
      child_->write("(exit)\n");
      child_->close_stdin();
    } catch (const ProcessError&) {
    }
  }
}

void Session::send(const std::string& command) {
  if (dead_) throw SolverCrashed("solver session is no longer usable");
  if (std::getenv("INDCERT_TRACE")) std::fputs(command.c_str(), stderr);
  try {
    child_->write(command);
  } catch (const ProcessError& e) {
    crashed(e.what());
  }
}

void Session::crashed(const std::string& what) {
  dead_ = true;
  child_->kill();
  child_->drain_stderr(ChildProcess::Clock::now() + std::chrono::milliseconds(200));
  std::string err = child_->stderr_text();
  if (err.size() > 400) err = err.substr(0, 400) + "...";
  throw SolverCrashed("solver '" + cfg_.executable + "' " + what + (err.empty() ? "" : ": " + err));
}

sexpr::SExpr Session::read_reply() {
  auto deadline = ChildProcess::Clock::now() + cfg_.timeout;
  for (;;) {
    if (auto n = sexpr::complete_datum_length(buffer_)) {
      std::string text = buffer_.substr(0, *n);
      buffer_.erase(0, *n);
      sexpr::Reader reader(text);
      std::optional<sexpr::SExpr> datum;
      try {
        datum = reader.next();
      } catch (const sexpr::SyntaxError& e) {
        throw ProtocolError(std::string("unparseable solver reply: ") + e.what());
      }
      if (!datum) continue;  // only a comment
      if (datum->is_call("error")) {
        std::string msg = datum->items.size() > 1 ? datum->items[1].text : "";
        throw ProtocolError("solver error: " + msg);
      }
      if (datum->is_atom("unsupported")) throw ProtocolError("solver reported an unsupported command");
      return *datum;
    }
    if (dead_) throw SolverCrashed("solver session is no longer usable");
    switch (child_->read(buffer_, deadline)) {
      case ChildProcess::ReadStatus::Data:
        break;
      case ChildProcess::ReadStatus::Timeout:
        dead_ = true;
        child_->kill();
        throw SolverTimeout("solver did not answer within " + std::to_string(cfg_.timeout.count()) + " ms");
      case ChildProcess::ReadStatus::Eof: {
        // A final atom without trailing newline is still a complete reply.
        if (!buffer_.empty() && buffer_.find_first_not_of(" \t\r\n") != std::string::npos) {
          buffer_ += '\n';
          if (sexpr::complete_datum_length(buffer_)) {
            dead_ = true;
            continue;
          }
        }
        crashed("closed its output");
      }
    }
  }
}

bool Session::declared(const std::string& name) const {
  for (const auto& level : declared_)
    if (level.count(name)) return true;
  return false;
}

void Session::declare_symbols(const Formula& f) {
  Symbols syms;
  collect_symbols(f, syms);
  std::string cmds;
  auto need = [&](const std::string& name) {
    if (declared(name)) return false;
    declared_.back().insert(name);
    return true;
  };
  for (const auto& c : syms.int_consts)
    if (need(c)) cmds += "(declare-const " + c + " Int)\n";
  for (const auto& p : syms.props)
    if (need(p)) cmds += "(declare-const " + p + " Bool)\n";
  for (const auto& [fn, arity] : syms.functions) {
    if (!need(fn)) continue;
    std::string domain;
    for (std::size_t i = 0; i < arity; ++i) domain += i ? " Int" : "Int";
    cmds += "(declare-fun " + fn + " (" + domain + ") Int)\n";
  }
  if (!cmds.empty()) send(cmds);
}

void Session::declare_props(const std::vector<std::string>& names) {
  std::string cmds;
  for (const auto& n : names) {
    if (declared(n)) continue;
    declared_.back().insert(n);
    cmds += "(declare-const " + n + " Bool)\n";
  }
  if (!cmds.empty()) send(cmds);
}

void Session::push() {
  send("(push 1)\n");
  declared_.emplace_back();
  scopes_.emplace_back();
}

void Session::pop() {
  if (scopes_.size() <= 1) throw std::logic_error("pop without matching push");
  send("(pop 1)\n");
  declared_.pop_back();
  scopes_.pop_back();
}

void Session::add(const Formula& f) {
  declare_symbols(f);
  send("(assert " + to_string(f) + ")\n");
  scopes_.back().push_back(f);
}

Status Session::check() {
  send("(check-sat)\n");
  ++checks_;
  sexpr::SExpr reply = read_reply();
  Status status;
  if (reply.is_atom("sat"))
    status = Status::Sat;
  else if (reply.is_atom("unsat"))
    status = Status::Unsat;
  else if (reply.is_atom("unknown"))
    status = Status::Unknown;
  else
    throw ProtocolError("unexpected reply to check-sat: " + sexpr::to_string(reply));
  if (status == Status::Sat && cfg_.verify_models && logic_ == Logic::GroundUF) verify_model();
  return status;
}

namespace {

Int parse_value(const sexpr::SExpr& v) {
  if (v.is_numeral()) return parse_int(v.text);
  if (v.is_call("-") && v.items.size() == 2 && v.items[1].is_numeral()) return -parse_int(v.items[1].text);
  throw ProtocolError("unexpected integer value: " + sexpr::to_string(v));
}

std::vector<sexpr::SExpr> value_pairs(const sexpr::SExpr& reply, std::size_t expected) {
  if (!reply.is_list() || reply.items.size() != expected)
    throw ProtocolError("unexpected reply to get-value: " + sexpr::to_string(reply));
  for (const auto& pair : reply.items)
    if (!pair.is_list() || pair.items.size() != 2)
      throw ProtocolError("unexpected get-value entry: " + sexpr::to_string(pair));
  return reply.items;
}

}  // namespace

std::vector<Int> Session::int_values(const std::vector<Term>& terms) {
  if (terms.empty()) return {};
  std::string cmd = "(get-value (";
  for (std::size_t i = 0; i < terms.size(); ++i) cmd += (i ? " " : "") + to_string(terms[i]);
  cmd += "))\n";
  for (const auto& t : terms) {
    Symbols syms;
    collect_symbols(t, syms);
    for (const auto& c : syms.int_consts)
      if (!declared(c)) throw std::logic_error("get-value for undeclared constant " + c);
  }
  send(cmd);
  std::vector<Int> out;
  for (const auto& pair : value_pairs(read_reply(), terms.size())) out.push_back(parse_value(pair.items[1]));
  return out;
}

std::vector<bool> Session::bool_values(const std::vector<std::string>& props) {
  if (props.empty()) return {};
  std::string cmd = "(get-value (";
  for (std::size_t i = 0; i < props.size(); ++i) cmd += (i ? " " : "") + props[i];
  cmd += "))\n";
  send(cmd);
  std::vector<bool> out;
  for (const auto& pair : value_pairs(read_reply(), props.size())) {
    const auto& v = pair.items[1];
    if (v.is_atom("true"))
      out.push_back(true);
    else if (v.is_atom("false"))
      out.push_back(false);
    else
      throw ProtocolError("unexpected Boolean value: " + sexpr::to_string(v));
  }
  return out;
}

std::vector<Formula> Session::assertions() const {
  std::vector<Formula> out;
  for (const auto& scope : scopes_) out.insert(out.end(), scope.begin(), scope.end());
  return out;
}

CellInterpretation Session::model_cells() {
  Symbols syms;
  std::vector<Term> apps;
  for (const auto& f : assertions()) {
    collect_symbols(f, syms);
    collect_apps(f, apps);
  }
  CellInterpretation model;
  std::vector<Term> consts;
  for (const auto& c : syms.int_consts) consts.push_back(Term::constant(c));
  auto values = int_values(consts);
  for (std::size_t i = 0; i < consts.size(); ++i) model.set(Cell::constant(consts[i].name()), values[i]);

  std::set<Cell> cells;
  for (const auto& a : apps) {
    if (a.args().size() != 1) continue;
    if (auto n = eval_ground(a.args()[0], model)) cells.insert(Cell::app(a.name(), *n));
  }
  std::vector<Term> cell_terms;
  for (const auto& c : cells) cell_terms.push_back(to_term(c));
  values = int_values(cell_terms);
  std::size_t i = 0;
  for (const auto& c : cells) model.set(c, values[i++]);
  return model;
}

std::map<std::string, bool> Session::model_props() {
  Symbols syms;
  for (const auto& f : assertions()) collect_symbols(f, syms);
  std::vector<std::string> names(syms.props.begin(), syms.props.end());
  auto values = bool_values(names);
  std::map<std::string, bool> out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = values[i];
  return out;
}

void Session::verify_model() {
  CellInterpretation model = model_cells();
  auto props = model_props();
  for (const auto& f : assertions()) {
    Truth t = eval_formula(f, model, props);
    if (t != Truth::True)
      throw ProtocolError("solver model does not satisfy assertion (" + std::string(indcert::to_string(t)) +
                          "): " + to_string(f));
  }
}

QueryResult check(const SolverConfig& cfg, Logic logic, const std::vector<Formula>& assertions) {
  Session s(cfg, logic);
  for (const auto& f : assertions) s.add(f);
  QueryResult r;
  r.status = s.check();
  if (r.status == Status::Sat && logic == Logic::GroundUF) {
    r.model = s.model_cells();
    r.props = s.model_props();
  }
  return r;
}

Validity check_validity(const SolverConfig& cfg, const Formula& phi) {
  try {
    Session s(cfg, Logic::QuantifiedLIA);
    s.add(Formula::negation(phi));
    switch (s.check()) {
      case Status::Unsat: return Validity::Valid;
      case Status::Sat: return Validity::Invalid;
      case Status::Unknown: return Validity::Unknown;
    }
  } catch (const SolverTimeout&) {
    return Validity::Unknown;
  }
  return Validity::Unknown;
}

}  // namespace indcert
