#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indcert/backend.hpp"
#include "indcert/certificate.hpp"
#include "indcert/encoder.hpp"
#include "indcert/fragment.hpp"

namespace indcert {

struct EngineOptions {
  int max_iterations = 64;
  std::optional<Interval> init_interval;
  /// Start from the hull of 0 and the numeral arguments of F.
  bool seed_from_ground = false;
  /// Cap on blocking rounds within one interval before expanding anyway.
  int max_refinements = 256;
  /// DoublyBounded guards whose range has fewer instantiations than this
  /// are decided by instantiating the whole range at once.
  Int finite_threshold = 0;
};

enum class Outcome { Sat, Unsat, Unknown };
enum class UnknownReason { None, Budget, SolverUnknown, UnsupportedObligation };

const char* to_string(Outcome o);
const char* to_string(UnknownReason r);

/// One solver-checked propagability obligation.
struct ObligationRecord {
  Sign direction = Sign::Plus;
  std::set<std::size_t> selected;
  /// Constant values substituted into the obligation; empty for the
  /// constant-independent check.
  std::map<std::string, Int> consts;
  Validity result = Validity::Unknown;
};

struct EngineStats {
  int iterations = 0;
  int obligation_checks = 0;
  int memo_hits = 0;
  int blocked_patterns = 0;
  std::chrono::milliseconds wall_time{0};
};

struct SatOutcome {
  Outcome outcome = Outcome::Unknown;
  UnknownReason reason = UnknownReason::None;
  std::string detail;
  std::optional<Certificate> cert;
  /// Last interval considered.
  Interval interval;
  /// For Unsat: the finite conjunction the solver refuted.
  std::vector<Formula> refuted;
  std::vector<ObligationRecord> obligations;
  EngineStats stats;
};

SatOutcome solve(const FragmentProblem& p, const EngineOptions& opts, const SolverConfig& cfg);

/// Starting interval per options and guard.
Interval initial_interval(const FragmentProblem& p, const EngineOptions& opts);

/// Checks propagability obligations with memoization, first independent of
/// the constants and then, if needed, for concrete constant values.
class ObligationOracle {
 public:
  ObligationOracle(const FragmentProblem& p, SolverConfig cfg);

  struct Answer {
    Validity result = Validity::Unknown;
    /// The verdict depends on these constant values (empty if it holds or
    /// fails for all of them).
    std::map<std::string, Int> consts;
  };

  /// `model` supplies constant values for the constant-specific check.
  Answer check(Sign s, const std::set<std::size_t>& selected, const CellInterpretation& model);

  const std::vector<ObligationRecord>& records() const { return records_; }
  int checks() const { return static_cast<int>(records_.size()); }
  int memo_hits() const { return memo_hits_; }

 private:
  Validity query(Sign s, const std::set<std::size_t>& selected, const std::map<std::string, Int>& consts);
  /// False only when no value of the constants makes the obligation valid.
  bool holds_for_some_consts(const std::set<std::size_t>& selected);

  const FragmentProblem& p_;
  SolverConfig cfg_;
  std::set<std::string> q_consts_;
  std::map<std::tuple<Sign, std::set<std::size_t>, std::map<std::string, Int>>, Validity> memo_;
  std::map<std::set<std::size_t>, bool> some_consts_;
  std::vector<ObligationRecord> records_;
  int memo_hits_ = 0;
};

/// Satisfiability of the selector encoding for one direction and a fixed
/// interval with propagability enforced lazily; the counterpart of the
/// disjunction over all subsets of psi(p, s, S, b).
Status extension_satisfiable(const FragmentProblem& p, Sign s, const Interval& b, const SolverConfig& cfg);

}  // namespace indcert
