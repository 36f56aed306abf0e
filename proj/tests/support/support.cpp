#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "indcert/cli.hpp"
#include "indcert/parser.hpp"

namespace indcert::test {

SolverConfig solver() {
  const char* env = std::getenv("INDCERT_SOLVER");
  if (env && *env) return SolverConfig::for_command(env);
  return SolverConfig::for_command(INDCERT_TEST_SOLVER);
}

bool solver_available() {
  static const bool ok = [] {
    if (std::string(INDCERT_TEST_SOLVER).empty() && !std::getenv("INDCERT_SOLVER")) return false;
    try {
      return check(solver(), Logic::GroundUF, {Formula::truth()}).status == Status::Sat;
    } catch (const std::exception&) {
      return false;
    }
  }();
  return ok;
}

std::filesystem::path source_dir() { return INDCERT_SOURCE_DIR; }
std::filesystem::path corpus_dir() { return source_dir() / "bench" / "corpus"; }
std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FragmentProblem problem(std::string_view smtlib) { return analyze(parse(smtlib)); }

std::filesystem::path case_file(const std::string& name, const std::string& variant) {
  return corpus_dir() / "generated" / (name + "." + variant + ".smt2");
}

FragmentProblem load_case(const std::string& name, const std::string& variant) {
  return problem(read_text(case_file(name, variant)));
}

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("indcert-" + tag + "-" + std::to_string(rng() % 1000000000));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace indcert::test
