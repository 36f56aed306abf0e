#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indcert/backend.hpp"
#include "indcert/fragment.hpp"
#include "indcert/sexpr.hpp"

namespace indcert {

/// Data-only satisfiability certificate: the checker re-derives every
/// formula from the problem.
struct Certificate {
  Interval interval;
  Guard guard;
  /// Constants and cells f(n).
  CellInterpretation interpretation;
  /// Selected QTerm identifiers (variable named `x`); absent when the
  /// direction is not certified.
  std::optional<std::vector<std::string>> sel_up;
  std::optional<std::vector<std::string>> sel_down;
  /// Solver that verified the propagability obligations, if recorded.
  std::optional<std::string> solver;

  const std::optional<std::vector<std::string>>& selection(Sign s) const {
    return s == Sign::Plus ? sel_up : sel_down;
  }
  std::optional<std::vector<std::string>>& selection(Sign s) { return s == Sign::Plus ? sel_up : sel_down; }

  /// The constant part of the interpretation.
  CellInterpretation constants() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class MalformedCertificate : public std::runtime_error {
 public:
  MalformedCertificate(sexpr::Position pos, const std::string& message);
  const sexpr::Position& position() const { return pos_; }

 private:
  sexpr::Position pos_;
};

std::string serialize(const Certificate& c);
Certificate deserialize(std::string_view text);

/// Selection as QTerm indices; nullopt if an identifier matches no QTerm.
std::optional<std::set<std::size_t>> resolve_selection(const FragmentProblem& p,
                                                       const std::vector<std::string>& ids);

struct Failure {
  std::string obligation;  // well-formed, base, extremal-up, clash-down, ...
  std::string description;
};

struct Verdict {
  std::vector<Failure> failures;

  bool accepted() const { return failures.empty(); }
  bool failed(const std::string& obligation) const;
};

/// Checks every obligation and reports each failure separately. Only the
/// propagability obligations use the solver.
Verdict check(const FragmentProblem& p, const Certificate& c, const SolverConfig& cfg);

}  // namespace indcert
