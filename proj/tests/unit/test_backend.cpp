#include <gtest/gtest.h>

#include <fstream>

#include "indcert/backend.hpp"
#include "indcert/encoder.hpp"
#include "indcert/parser.hpp"
#include "indcert/process.hpp"
#include "support.hpp"

using namespace indcert;
using indcert::test::problem;

namespace {

Formula P(std::string_view s) { return parse_formula(s, {"x", "u", "v"}); }

SolverConfig fake(const std::string& command, int timeout_ms = 2000) {
  SolverConfig cfg = SolverConfig::for_command(command);
  cfg.timeout = std::chrono::milliseconds(timeout_ms);
  return cfg;
}

/// Stand-in solver: a shell script with the given body.
SolverConfig script(const std::string& body, int timeout_ms = 2000) {
  static auto dir = test::scratch_dir("fake-solver");
  static int n = 0;
  auto file = dir / ("solver" + std::to_string(n++) + ".sh");
  {
    std::ofstream out(file);
    out << "#!/bin/sh\n" << body << "\n";
  }
  std::filesystem::permissions(file, std::filesystem::perms::owner_all);
  return fake(file.string(), timeout_ms);
}

}  // namespace

TEST(SolverConfig, ForCommand) {
  SolverConfig z3 = SolverConfig::for_command("/usr/bin/z3");
  EXPECT_EQ(z3.executable, "/usr/bin/z3");
  EXPECT_EQ(z3.extra_args, std::vector<std::string>{"-in"});
  SolverConfig cvc = SolverConfig::for_command("cvc5 --lang smt2 --incremental");
  EXPECT_EQ(cvc.executable, "cvc5");
  EXPECT_EQ(cvc.extra_args.size(), 3u);
  EXPECT_EQ(cvc.describe(), "cvc5 --lang smt2 --incremental");
  EXPECT_EQ(SolverConfig::for_command("z3 -smt2 -in").extra_args.size(), 2u);
  EXPECT_GT(SolverConfig{}.timeout.count(), 0);
}

TEST(Process, RunCommandCapturesOutput) {
  CommandResult r = run_command({"sh", "-c", "echo out; echo err >&2; exit 3"}, std::chrono::seconds(5));
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_FALSE(r.timed_out);
  EXPECT_EQ(r.out, "out\n");
  EXPECT_EQ(r.err, "err\n");
}

TEST(Process, RunCommandTimesOut) {
  CommandResult r = run_command({"sleep", "5"}, std::chrono::milliseconds(200));
  EXPECT_TRUE(r.timed_out);
  EXPECT_LT(r.elapsed.count(), 3000);
}

TEST(Backend, TrivialUnsat) {
  INDCERT_REQUIRE_SOLVER();
  EXPECT_EQ(check(test::solver(), Logic::GroundUF, {P("(< 1 0)")}).status, Status::Unsat);
}

TEST(Backend, GroundModelOfProblemOne) {
  INDCERT_REQUIRE_SOLVER();
  FragmentProblem p = problem(
      "(declare-fun f (Int) Int)(assert (= (f 4) 7))"
      "(assert (forall ((x Int)) (= (f (+ x 1)) (+ (f x) 1))))");
  std::vector<Formula> query = {p.F, instantiate_q(p, 0)};
  QueryResult r = check(test::solver(), Logic::GroundUF, query);
  ASSERT_EQ(r.status, Status::Sat);
  EXPECT_EQ(r.model.get(Cell::app("f", 4)), Int(7));
  ASSERT_TRUE(r.model.get(Cell::app("f", 0)));
  ASSERT_TRUE(r.model.get(Cell::app("f", 1)));
  EXPECT_EQ(*r.model.get(Cell::app("f", 1)), *r.model.get(Cell::app("f", 0)) + 1);
  for (const auto& f : query) EXPECT_EQ(eval_formula(f, r.model), Truth::True);
}

TEST(Backend, Validity) {
  INDCERT_REQUIRE_SOLVER();
  auto cfg = test::solver();
  auto q = [](const char* body) {
    return Formula::forall("x", Formula::forall("u", Formula::exists("v", P(body))));
  };
  EXPECT_EQ(check_validity(cfg, q("(= v (+ u 1))")), Validity::Valid);
  EXPECT_EQ(check_validity(cfg, q("(and (= v (+ u 1)) (= v 2))")), Validity::Invalid);
  EXPECT_EQ(check_validity(cfg, Formula::forall("x", Formula::exists("v", P("(= v v)")))), Validity::Valid);
}

TEST(Backend, SessionPushPop) {
  INDCERT_REQUIRE_SOLVER();
  Session s(test::solver(), Logic::GroundUF);
  s.add(P("(= (f 0) 1)"));
  EXPECT_EQ(s.check(), Status::Sat);
  s.push();
  s.add(P("(= (f 0) (g k))"));
  s.add(P("(= (g k) 2)"));
  EXPECT_EQ(s.check(), Status::Unsat);
  s.pop();
  EXPECT_EQ(s.check(), Status::Sat);
  EXPECT_EQ(s.assertions().size(), 1u);
  // symbols declared inside the popped scope are declared again
  s.push();
  s.add(P("(= (g k) 5)"));
  EXPECT_EQ(s.check(), Status::Sat);
  EXPECT_EQ(s.int_values({Term::app("g", Term::constant("k"))}), std::vector<Int>{5});
  s.pop();
  EXPECT_THROW(s.pop(), std::logic_error);
  EXPECT_EQ(s.check_count(), 4u);
}

TEST(Backend, BooleanValues) {
  INDCERT_REQUIRE_SOLVER();
  Session s(test::solver(), Logic::GroundUF);
  s.add(Formula::conj({Formula::prop("p_up!0"), Formula::negation(Formula::prop("p_up!1"))}));
  s.declare_props({"p_up!2"});
  ASSERT_EQ(s.check(), Status::Sat);
  auto v = s.bool_values({"p_up!0", "p_up!1", "p_up!2"});
  EXPECT_TRUE(v[0]);
  EXPECT_FALSE(v[1]);
  auto props = s.model_props();
  EXPECT_TRUE(props.at("p_up!0"));
}

TEST(Backend, NegativeModelValues) {
  INDCERT_REQUIRE_SOLVER();
  Session s(test::solver(), Logic::GroundUF);
  s.add(P("(= c (- 12))"));
  s.add(P("(= (f c) (- 100000000000000000000))"));
  ASSERT_EQ(s.check(), Status::Sat);
  CellInterpretation m = s.model_cells();
  EXPECT_EQ(m.get(Cell::constant("c")), Int(-12));
  EXPECT_EQ(m.get(Cell::app("f", -12)), parse_int("-100000000000000000000"));
}

TEST(Backend, VerifyModelsOnRequest) {
  INDCERT_REQUIRE_SOLVER();
  SolverConfig cfg = test::solver();
  cfg.verify_models = true;
  Session s(cfg, Logic::GroundUF);
  s.add(P("(and (< 0 (f 1)) (or (= (f 2) 3) (= (f 2) (- (f 1) 1))))"));
  EXPECT_EQ(s.check(), Status::Sat);
}

TEST(Backend, MissingExecutable) {
  EXPECT_THROW(Session(fake("/nonexistent/solver-binary"), Logic::GroundUF), SolverCrashed);
}

TEST(Backend, SolverExitsEarly) {
  Session s(fake("true"), Logic::GroundUF);
  EXPECT_THROW(
      {
        s.add(P("(= a 1)"));
        s.check();
      },
      SolverCrashed);
}

TEST(Backend, SolverNeverAnswers) {
  // reads its input and stays silent
  Session s(script("cat >/dev/null", 300), Logic::GroundUF);
  EXPECT_THROW(s.check(), SolverTimeout);
  EXPECT_THROW(s.check(), SolverCrashed);  // the session is dead afterwards
}

TEST(Backend, GarbageReply) {
  // echoes the commands back, which is not a check-sat answer
  Session s(fake("cat"), Logic::GroundUF);
  EXPECT_THROW(s.check(), ProtocolError);
}

TEST(Backend, ErrorReply) {
  Session s(script("echo '(error \"boom\")'; cat >/dev/null"), Logic::GroundUF);
  try {
    s.check();
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
}

TEST(Backend, ValidityTimeoutIsUnknown) {
  SolverConfig cfg = script("cat >/dev/null", 200);
  EXPECT_EQ(check_validity(cfg, Formula::forall("x", P("(= x x)"))), Validity::Unknown);
}
