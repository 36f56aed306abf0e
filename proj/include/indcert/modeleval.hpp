#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>

#include "indcert/backend.hpp"
#include "indcert/certificate.hpp"
#include "indcert/fragment.hpp"

namespace indcert {

/// The instance query for z had no model: the certificate's propagability
/// claim does not hold for this instantiation.
class PropagatorFailed : public std::runtime_error {
 public:
  PropagatorFailed(Int z, const std::string& message);
  const Int& z() const { return z_; }

 private:
  Int z_;
};

/// Evaluates the model a checked certificate describes. Cells outside the
/// certificate are produced on demand, one solver query per instantiation,
/// descending towards the base interval.
class ModelEvaluator {
 public:
  ModelEvaluator(const FragmentProblem& p, Certificate cert, SolverConfig cfg, std::size_t depth_cap = 1000000);
  ~ModelEvaluator();

  /// The instantiation whose propagated cells contain `u`, if any.
  std::optional<Int> inst(const Cell& u) const;
  Int val(const Cell& u);

  /// Q[z] under val-derived values of its relevant cells.
  Truth check_instance(const Int& z);

  const std::map<Cell, Int>& memo() const { return memo_; }
  std::size_t instance_queries() const { return queries_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  struct Frame {
    Int z;
    Sign direction;
  };

  std::optional<Frame> locate(const Cell& u) const;
  std::optional<Int> known(const Cell& u) const;
  /// Cells of X_z: selected occurrences at z that the certificate leaves open.
  std::set<Cell> propagated(const Frame& f) const;
  Int rank(const Frame& f) const;
  void solve_instance(const Frame& f, const std::set<Cell>& open);

  const FragmentProblem& p_;
  Certificate cert_;
  SolverConfig cfg_;
  std::size_t depth_cap_;
  CellInterpretation consts_;
  std::set<std::size_t> selected_[2];
  std::unique_ptr<Session> session_;
  std::map<Cell, Int> memo_;
  std::set<Int> done_;
  std::size_t queries_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace indcert
