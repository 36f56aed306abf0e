#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "indcert/backend.hpp"
#include "indcert/engine.hpp"

namespace indcert::bench {

/// unbounded, lower (0 <= x), bounded c (0 <= x <= 10^c).
struct Variant {
  enum class Kind { Unbounded, Lower, Bounded };
  Kind kind = Kind::Unbounded;
  int c = 0;

  std::string name() const;
  static std::optional<Variant> parse(const std::string& name);
  /// unbounded, lower, bounded1 .. bounded5
  static std::vector<Variant> standard();
};

/// Rewrites the quantified assertion of an unbounded template into `v`.
/// Throws std::invalid_argument if the template has no universal assertion.
std::string make_variant(std::string_view template_text, const Variant& v, const std::string& origin);

/// Writes `<dir>/generated/<template>.<variant>.smt2` for every template in
/// `<dir>/templates`. Returns the files written.
std::vector<std::filesystem::path> generate_corpus(const std::filesystem::path& dir);

struct BenchCase {
  std::string name;  // template name
  Variant variant;
  std::filesystem::path file;
  std::optional<std::string> expected;  // sat / unsat / unknown / error
};

/// Generated cases of `<dir>`, sorted, with expectations from `golden.txt`.
std::vector<BenchCase> load_corpus(const std::filesystem::path& dir);

/// golden.txt: `<name>.<variant> <verdict>` per line; `#` starts a comment.
std::map<std::string, std::string> read_golden(const std::filesystem::path& file);

struct BaselineResult {
  std::string verdict;  // sat / unsat / unknown / timeout / error
  std::chrono::milliseconds elapsed{0};
};

/// Runs `command file` (command split on blanks) and reads the first line.
BaselineResult run_baseline(const std::filesystem::path& file, const std::string& command,
                            std::chrono::milliseconds timeout);

struct BenchRow {
  std::string name;
  std::string variant;
  std::string verdict;  // sat / unsat / unknown / error
  int iterations = 0;
  int obligations = 0;
  int blocked = 0;
  std::chrono::milliseconds elapsed{0};
  bool checked = false;    // the certificate went through the checker
  bool certified = false;  // ... and was accepted
  std::string detail;
  std::optional<BaselineResult> baseline;
};

struct SuiteOptions {
  EngineOptions engine;
  unsigned jobs = 1;
  std::optional<std::string> baseline;
  std::chrono::milliseconds baseline_timeout{60000};
  bool check_certificates = true;
};

BenchRow run_case(const BenchCase& c, const SolverConfig& cfg, const SuiteOptions& opts);

/// Rows in case order; per-case failures end up in the row.
std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases, const SolverConfig& cfg,
                                const SuiteOptions& opts);

/// name,variant,verdict,iterations,obligations,blocked,ms (+ baseline
/// columns when any row has a baseline).
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Rows whose verdict differs from the expectation (or whose Sat
/// certificate was rejected).
std::vector<std::string> mismatches(const std::vector<BenchCase>& cases, const std::vector<BenchRow>& rows);

}  // namespace indcert::bench
