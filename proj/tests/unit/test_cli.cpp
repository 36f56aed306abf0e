#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "indcert/certificate.hpp"
#include "indcert/cli.hpp"
#include "support.hpp"

using namespace indcert;
using test::run_cli;
namespace fs = std::filesystem;

namespace {

std::string case_path(const std::string& name, const std::string& variant) {
  return test::case_file(name, variant).string();
}

std::string solver_flag() { return test::solver().describe(); }

void write(const fs::path& file, const std::string& text) {
  fs::create_directories(file.parent_path());
  std::ofstream(file) << text;
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, cli::kSuccess);
  EXPECT_NE(help.out.find("check-cert"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", case_path("prob1", "lower"), "--max-iters", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"solve", case_path("prob1", "lower"), "--init", "3"}).code, cli::kUsage);
  auto missing = run_cli({"solve", "/nonexistent/problem.smt2"});
  EXPECT_EQ(missing.code, cli::kUsage);
  EXPECT_FALSE(missing.err.empty());
}

TEST(Cli, OutsideTheFragment) {
  auto r = run_cli({"solve", case_path("invalid", "lower")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("coefficient"), std::string::npos);
}

TEST(Cli, SolveVerdicts) {
  INDCERT_REQUIRE_SOLVER();
  auto sat = run_cli({"solve", case_path("prob1", "lower"), "--solver", solver_flag()});
  EXPECT_EQ(sat.code, cli::kSuccess);
  EXPECT_EQ(sat.out, "sat\n");
  auto unsat = run_cli({"solve", case_path("finite_unsat", "unbounded")});
  EXPECT_EQ(unsat.code, cli::kNegative);
  EXPECT_EQ(unsat.out, "unsat\n");
  auto unknown = run_cli({"solve", case_path("induction", "unbounded"), "--max-iters", "3"});
  EXPECT_EQ(unknown.code, cli::kUnknown);
  EXPECT_EQ(unknown.out, "unknown\n");
  EXPECT_NE(unknown.err.find("budget"), std::string::npos);
}

TEST(Cli, EngineFlags) {
  INDCERT_REQUIRE_SOLVER();
  fs::path dir = test::scratch_dir("cli-flags");
  std::string cert = (dir / "p.cert").string();
  auto r = run_cli({"solve", case_path("prob1", "unbounded"), "--seed-from-ground", "--timeout-ms", "20000",
                    "--emit-cert", cert});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_TRUE(deserialize(test::read_text(cert)).interval.contains(4));
  r = run_cli({"solve", case_path("prob1", "unbounded"), "--init", "-6", "6", "--emit-cert", cert});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(deserialize(test::read_text(cert)).interval, (Interval{-6, 6}));
}

TEST(Cli, SolveCheckEvalComposition) {
  INDCERT_REQUIRE_SOLVER();
  fs::path dir = test::scratch_dir("cli-compose");
  std::string problem = case_path("prob1", "unbounded");
  std::string cert = (dir / "prob1.cert").string();
  ASSERT_EQ(run_cli({"solve", problem, "--emit-cert", cert}).code, cli::kSuccess);
  auto checked = run_cli({"check-cert", problem, cert});
  EXPECT_EQ(checked.code, cli::kSuccess);
  EXPECT_EQ(checked.out, "accepted\n");
  auto v = run_cli({"eval", problem, cert, "f", "25"});
  EXPECT_EQ(v.code, cli::kSuccess) << v.err;
  EXPECT_EQ(v.out, "28\n");
  EXPECT_EQ(run_cli({"eval", problem, cert, "f", "-9"}).out, "-6\n");
  EXPECT_EQ(run_cli({"eval", problem, cert, "f", "twelve"}).code, cli::kUsage);
}

TEST(Cli, RejectedCertificate) {
  INDCERT_REQUIRE_SOLVER();
  fs::path dir = test::scratch_dir("cli-reject");
  std::string problem = case_path("prob1", "lower");
  std::string cert = (dir / "bad.cert").string();
  write(cert,
        "(certificate (interval 0 3) (guard (lower 0)) (consts) (cells ((f 0) 3) ((f 1) 4) ((f 2) 5) ((f 3) 6) "
        "((f 4) 7)) (select-up (f (+ x 1))))\n");
  auto r = run_cli({"check-cert", problem, cert});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_EQ(r.out.rfind("rejected\nclash-up: ", 0), 0u) << r.out;
  auto e = run_cli({"eval", problem, cert, "f", "9"});
  EXPECT_EQ(e.code, cli::kNegative);
  EXPECT_NE(e.err.find("clash-up"), std::string::npos);
  write(cert, "(certificate (interval 0");
  EXPECT_EQ(run_cli({"check-cert", problem, cert}).code, cli::kUsage);
}

TEST(Cli, BackendFailure) {
  auto r = run_cli({"solve", case_path("prob1", "lower"), "--solver", "/nonexistent/solver"});
  EXPECT_EQ(r.code, cli::kBackend);
  EXPECT_NE(r.err.find("backend error"), std::string::npos);
}

TEST(Cli, BenchAndGenCorpus) {
  INDCERT_REQUIRE_SOLVER();
  fs::path dir = test::scratch_dir("cli-bench");
  fs::create_directories(dir / "templates");
  for (const char* t : {"prob1.smt2", "finite_unsat.smt2"})
    fs::copy_file(test::corpus_dir() / "templates" / t, dir / "templates" / t);
  auto gen = run_cli({"gen-corpus", dir.string()});
  ASSERT_EQ(gen.code, cli::kSuccess) << gen.err;
  EXPECT_EQ(std::count(gen.out.begin(), gen.out.end(), '\n'), 14);

  std::string golden;
  for (const auto& v : {"unbounded", "lower", "bounded1", "bounded2", "bounded3", "bounded4", "bounded5"}) {
    golden += std::string("prob1.") + v + " sat\n";
    golden += std::string("finite_unsat.") + v + " unsat\n";
  }
  write(dir / "golden.txt", golden);
  std::string csv = (dir / "out.csv").string();
  auto ok = run_cli({"bench", dir.string(), "--csv", csv, "--jobs", "2", "--baseline", solver_flag()});
  EXPECT_EQ(ok.code, cli::kSuccess) << ok.err;
  std::string table = test::read_text(csv);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 15);
  EXPECT_EQ(table.rfind("name,variant,verdict,", 0), 0u);

  write(dir / "golden.txt", golden + "prob1.lower unsat\n");
  auto bad = run_cli({"bench", dir.string()});
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_NE(bad.err.find("mismatch: prob1.lower"), std::string::npos);
}

TEST(Cli, InstalledBinary) {
  INDCERT_REQUIRE_SOLVER();
  std::string cmd = std::string("\"") + INDCERT_CLI + "\" solve \"" + case_path("prob1", "lower") + "\"";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[64] = {};
  std::string out;
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  EXPECT_EQ(out, "sat\n");
  EXPECT_EQ(WEXITSTATUS(status), cli::kSuccess);

  pipe = popen((std::string("\"") + INDCERT_CLI + "\" solve \"" + case_path("finite_unsat", "lower") + "\"").c_str(),
               "r");
  ASSERT_NE(pipe, nullptr);
  while (std::fgets(buf, sizeof buf, pipe)) {
  }
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), cli::kNegative);
}
