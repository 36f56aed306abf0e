#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "indcert/ast.hpp"
#include "indcert/sexpr.hpp"

namespace indcert {

class ChildProcess;

enum class Logic { GroundUF, QuantifiedLIA };

/// SMT-LIB logic name sent with set-logic.
const char* logic_name(Logic logic);

struct SolverConfig {
  std::string executable = "z3";
  std::vector<std::string> extra_args = {"-in"};
  std::chrono::milliseconds timeout{30000};
  /// Re-evaluate every Sat model against the asserted ground formulas.
  bool verify_models = false;

  /// `command` is an executable optionally followed by arguments. A bare
  /// z3 executable gets `-in` so that it reads the script from stdin.
  static SolverConfig for_command(const std::string& command);
  /// for_command(INDCERT_SOLVER) when set, `z3 -in` otherwise.
  static SolverConfig from_environment();
  /// Executable and arguments, space separated.
  std::string describe() const;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solver exited or closed its output unexpectedly.
class SolverCrashed : public SolverError {
 public:
  using SolverError::SolverError;
};

class SolverTimeout : public SolverError {
 public:
  using SolverError::SolverError;
};

/// An error reply or a reply that could not be parsed.
class ProtocolError : public SolverError {
 public:
  using SolverError::SolverError;
};

enum class Status { Sat, Unsat, Unknown };
enum class Validity { Valid, Invalid, Unknown };

const char* to_string(Status s);
const char* to_string(Validity v);

struct QueryResult {
  Status status = Status::Unknown;
  /// Constants and the cells of all applications in the query (Sat only).
  CellInterpretation model;
  std::map<std::string, bool> props;
};

/// One incremental solver process. Symbols are declared on first use;
/// declarations made inside a push scope are forgotten on pop.
class Session {
 public:
  Session(SolverConfig cfg, Logic logic);
  ~Session();

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  void push();
  void pop();
  void add(const Formula& f);
  /// Declares Boolean constants that may not occur in any assertion yet.
  void declare_props(const std::vector<std::string>& names);
  Status check();

  /// get-value for ground integer terms.
  std::vector<Int> int_values(const std::vector<Term>& terms);
  std::vector<bool> bool_values(const std::vector<std::string>& props);
  /// After Sat: every constant of the active assertions and the cell of
  /// every ground application in them.
  CellInterpretation model_cells();
  std::map<std::string, bool> model_props();

  /// Active assertions, outermost scope first.
  std::vector<Formula> assertions() const;
  std::size_t check_count() const { return checks_; }
  const SolverConfig& config() const { return cfg_; }

 private:
  void send(const std::string& command);
  sexpr::SExpr read_reply();
  [[noreturn]] void crashed(const std::string& what);
  void declare_symbols(const Formula& f);
  bool declared(const std::string& name) const;
  void verify_model();

  SolverConfig cfg_;
  Logic logic_;
  std::unique_ptr<ChildProcess> child_;
  std::string buffer_;
  std::vector<std::set<std::string>> declared_;
  std::vector<std::vector<Formula>> scopes_;
  std::size_t checks_ = 0;
  bool dead_ = false;
};

/// One-shot query in a fresh session.
QueryResult check(const SolverConfig& cfg, Logic logic, const std::vector<Formula>& assertions);

/// Valid iff the negation of the closed formula `phi` is unsatisfiable.
/// Solver unknown and timeouts map to Validity::Unknown.
Validity check_validity(const SolverConfig& cfg, const Formula& phi);

}  // namespace indcert
