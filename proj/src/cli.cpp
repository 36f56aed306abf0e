#include "indcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "indcert/bench.hpp"
#include "indcert/certificate.hpp"
#include "indcert/engine.hpp"
#include "indcert/modeleval.hpp"
#include "indcert/parser.hpp"

namespace indcert::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

FragmentProblem load_problem(const std::string& path) { return analyze(parse(read_file(path))); }

struct SolverFlags {
  std::string solver;
  long timeout_ms = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--solver", solver, "SMT-LIB solver command (default: $INDCERT_SOLVER or z3)");
    cmd->add_option("--timeout-ms", timeout_ms, "Per-query solver timeout")->check(CLI::PositiveNumber);
  }

  SolverConfig config() const {
    SolverConfig cfg = solver.empty() ? SolverConfig::from_environment() : SolverConfig::for_command(solver);
    if (timeout_ms > 0) cfg.timeout = std::chrono::milliseconds(timeout_ms);
    return cfg;
  }
};

struct EngineFlags {
  int max_iters = EngineOptions{}.max_iterations;
  bool seed = false;
  std::vector<std::string> init;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-iters", max_iters, "Iteration budget")->check(CLI::PositiveNumber);
    cmd->add_flag("--seed-from-ground", seed, "Start from the numeral arguments of the ground part");
    cmd->add_option("--init", init, "Initial interval")->expected(2)->allow_extra_args(false);
  }

  EngineOptions options() const {
    EngineOptions o;
    o.max_iterations = max_iters;
    o.seed_from_ground = seed;
    if (!init.empty()) {
      Interval b{parse_int(init[0]), parse_int(init[1])};
      if (b.lo > b.hi) throw UsageError("--init: empty interval " + to_string(b));
      o.init_interval = b;
    }
    return o;
  }
};

int run_solve(const std::string& file, const EngineFlags& ef, const SolverFlags& sf, const std::string& emit,
              std::ostream& out, std::ostream& err) {
  FragmentProblem p = load_problem(file);
  SatOutcome r = solve(p, ef.options(), sf.config());
  out << to_string(r.outcome) << "\n";
  if (r.outcome == Outcome::Sat) {
    if (!emit.empty()) write_file(emit, serialize(*r.cert) + "\n");
    return kSuccess;
  }
  if (r.outcome == Outcome::Unsat) return kNegative;
  err << "unknown (" << to_string(r.reason) << "): " << r.detail << "\n";
  return kUnknown;
}

int run_check(const std::string& problem, const std::string& cert_file, const SolverFlags& sf, std::ostream& out) {
  FragmentProblem p = load_problem(problem);
  Certificate c = deserialize(read_file(cert_file));
  Verdict v = check(p, c, sf.config());
  out << (v.accepted() ? "accepted" : "rejected") << "\n";
  for (const auto& f : v.failures) out << f.obligation << ": " << f.description << "\n";
  return v.accepted() ? kSuccess : kNegative;
}

int run_eval(const std::string& problem, const std::string& cert_file, const std::string& fsym,
             const std::string& arg, const SolverFlags& sf, std::ostream& out, std::ostream& err) {
  FragmentProblem p = load_problem(problem);
  Certificate c = deserialize(read_file(cert_file));
  SolverConfig cfg = sf.config();
  Verdict v = check(p, c, cfg);
  if (!v.accepted()) {
    err << "certificate rejected:";
    for (const auto& f : v.failures) err << " " << f.obligation;
    err << "\n";
    return kNegative;
  }
  Int n;
  try {
    n = parse_int(arg);
  } catch (const std::exception&) {
    throw UsageError("eval: '" + arg + "' is not an integer");
  }
  ModelEvaluator eval(p, c, cfg);
  out << eval.val(Cell::app(fsym, n)) << "\n";
  return kSuccess;
}

int run_bench(const std::string& dir, const EngineFlags& ef, const SolverFlags& sf, const std::string& csv,
              unsigned jobs, const std::string& baseline, std::ostream& out, std::ostream& err) {
  auto cases = bench::load_corpus(dir);
  if (cases.empty()) throw UsageError("no generated cases under " + dir + "/generated");
  bench::SuiteOptions opts;
  opts.engine = ef.options();
  opts.jobs = jobs;
  if (!baseline.empty()) opts.baseline = baseline;
  auto rows = bench::run_suite(cases, sf.config(), opts);
  if (csv.empty() || csv == "-") {
    bench::write_csv(out, rows);
  } else {
    std::ofstream f(csv, std::ios::binary);
    bench::write_csv(f, rows);
    if (!f) throw UsageError("cannot write " + csv);
  }
  auto bad = bench::mismatches(cases, rows);
  for (const auto& m : bad) err << "mismatch: " << m << "\n";
  return bad.empty() ? kSuccess : kNegative;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Satisfiability certificates for quantified UFLIA formulas", "indcert"};
  app.require_subcommand(1);

  SolverFlags sf;
  EngineFlags ef;
  std::string file, cert_file, emit, fsym, arg, dir, csv, baseline;
  unsigned jobs = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Decide a problem; prints sat, unsat or unknown");
  solve_cmd->add_option("file", file, "SMT-LIB problem")->required();
  solve_cmd->add_option("--emit-cert", emit, "Write the certificate of a sat answer");
  ef.add_to(solve_cmd);
  sf.add_to(solve_cmd);

  auto* check_cmd = app.add_subcommand("check-cert", "Verify a certificate against a problem");
  check_cmd->add_option("problem", file, "SMT-LIB problem")->required();
  check_cmd->add_option("cert", cert_file, "Certificate file")->required();
  sf.add_to(check_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Value of f(n) in the model a certificate describes");
  eval_cmd->add_option("problem", file, "SMT-LIB problem")->required();
  eval_cmd->add_option("cert", cert_file, "Certificate file")->required();
  eval_cmd->add_option("fsym", fsym, "Function symbol")->required();
  eval_cmd->add_option("n", arg, "Integer argument")->required();
  sf.add_to(eval_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Run the generated corpus and compare with golden verdicts");
  bench_cmd->add_option("corpus", dir, "Corpus directory")->required();
  bench_cmd->add_option("--csv", csv, "CSV output path (default: stdout)");
  bench_cmd->add_option("--jobs", jobs, "Concurrent cases")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--baseline", baseline, "Solver command to run directly on each problem file");
  ef.add_to(bench_cmd);
  sf.add_to(bench_cmd);

  auto* gen_cmd = app.add_subcommand("gen-corpus", "Regenerate guarded variants from the templates");
  gen_cmd->add_option("corpus", dir, "Corpus directory")->required();

  std::vector<const char*> argv = {"indcert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "indcert: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(file, ef, sf, emit, out, err);
    if (*check_cmd) return run_check(file, cert_file, sf, out);
    if (*eval_cmd) return run_eval(file, cert_file, fsym, arg, sf, out, err);
    if (*bench_cmd) return run_bench(dir, ef, sf, csv, jobs, baseline, out, err);
    if (*gen_cmd) {
      for (const auto& f : bench::generate_corpus(dir)) out << f.string() << "\n";
      return kSuccess;
    }
  } catch (const SolverError& e) {
    err << "indcert: backend error: " << e.what() << "\n";
    return kBackend;
  } catch (const std::exception& e) {
    err << "indcert: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace indcert::cli
