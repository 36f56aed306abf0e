#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "indcert/backend.hpp"
#include "indcert/fragment.hpp"

namespace indcert::test {

/// INDCERT_SOLVER if set, otherwise the solver found at configure time.
SolverConfig solver();
/// Whether the solver starts and answers a trivial query.
bool solver_available();

std::filesystem::path source_dir();
std::filesystem::path corpus_dir();
std::filesystem::path golden_dir();

std::string read_text(const std::filesystem::path& file);
FragmentProblem problem(std::string_view smtlib);
/// A corpus case, e.g. load_case("prob1", "lower").
FragmentProblem load_case(const std::string& name, const std::string& variant);
std::filesystem::path case_file(const std::string& name, const std::string& variant);

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

/// In-process run of the command-line front end.
CliRun run_cli(const std::vector<std::string>& args);

/// Fresh scratch directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

}  // namespace indcert::test

#define INDCERT_REQUIRE_SOLVER()                                  \
  do {                                                            \
    if (!::indcert::test::solver_available())                  \
      GTEST_SKIP() << "no SMT solver (set INDCERT_SOLVER)";       \
  } while (0)
