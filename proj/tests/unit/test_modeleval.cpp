#include <gtest/gtest.h>

#include <random>

#include "indcert/certificate.hpp"
#include "indcert/modeleval.hpp"
#include "support.hpp"

using namespace indcert;

namespace {

FragmentProblem& prob1() {
  static FragmentProblem p = test::load_case("prob1", "unbounded");
  return p;
}

Certificate golden(const std::string& name) {
  return deserialize(test::read_text(test::golden_dir() / (name + ".cert")));
}

}  // namespace

TEST(ModelEval, InstantiationOfPropagatedCells) {
  ModelEvaluator m(prob1(), golden("prob1.unbounded"), test::solver());
  // up selects f(x+1): f(10) comes from z = 9; down selects f(x): f(-10) from z = -10
  EXPECT_EQ(m.inst(Cell::app("f", 10)), Int(9));
  EXPECT_EQ(m.inst(Cell::app("f", -10)), Int(-10));
  // cells of the certificate are not propagated
  EXPECT_EQ(m.inst(Cell::app("f", 2)), std::nullopt);
  EXPECT_EQ(m.inst(Cell::app("g", 7)), std::nullopt);
}

TEST(ModelEval, NegativeCoefficientReachesOddArgumentsOnly) {
  FragmentProblem p = test::load_case("example1", "unbounded");
  ModelEvaluator m(p, golden("example1.unbounded"), test::solver());
  // f(-2x+3) below the interval covers 5, 7, ...
  EXPECT_EQ(m.inst(Cell::app("f", 5)), Int(-1));
  EXPECT_EQ(m.inst(Cell::app("f", 7)), Int(-2));
  EXPECT_EQ(m.inst(Cell::app("f", 4)), std::nullopt);
  EXPECT_EQ(m.inst(Cell::app("f", 6)), std::nullopt);
  EXPECT_EQ(m.inst(Cell::app("g", 3)), Int(3));
}

TEST(ModelEval, ValuesOfProblemOne) {
  INDCERT_REQUIRE_SOLVER();
  ModelEvaluator m(prob1(), golden("prob1.unbounded"), test::solver());
  EXPECT_EQ(m.val(Cell::app("f", 4)), Int(7));
  EXPECT_EQ(m.val(Cell::app("f", 10)), Int(13));
  EXPECT_EQ(m.val(Cell::app("f", -10)), Int(-7));
  // not constrained by anything: default value
  EXPECT_EQ(m.val(Cell::app("g", 999)), Int(0));
}

TEST(ModelEval, ValuesMatchClosedForm) {
  INDCERT_REQUIRE_SOLVER();
  ModelEvaluator m(prob1(), golden("prob1.unbounded"), test::solver());
  for (int n = -20; n <= 20; ++n) EXPECT_EQ(m.val(Cell::app("f", n)), Int(n + 3)) << n;
}

TEST(ModelEval, DepthAndMemo) {
  INDCERT_REQUIRE_SOLVER();
  ModelEvaluator m(prob1(), golden("prob1.unbounded"), test::solver());
  // f(5) is a certificate cell, so no query
  EXPECT_EQ(m.val(Cell::app("f", 5)), Int(8));
  EXPECT_EQ(m.instance_queries(), 0u);
  std::size_t queries = m.instance_queries();
  EXPECT_EQ(m.val(Cell::app("f", 12)), Int(15));
  // instances 11 down to 5
  EXPECT_EQ(m.max_depth(), 7u);
  EXPECT_EQ(m.instance_queries(), queries + 7);
  EXPECT_EQ(m.memo().at(Cell::app("f", 9)), Int(12));
  std::size_t after = m.instance_queries();
  EXPECT_EQ(m.val(Cell::app("f", 9)), Int(12));
  EXPECT_EQ(m.instance_queries(), after);
}

TEST(ModelEval, DepthCap) {
  INDCERT_REQUIRE_SOLVER();
  ModelEvaluator m(prob1(), golden("prob1.unbounded"), test::solver(), 3);
  EXPECT_EQ(m.val(Cell::app("f", 6)), Int(9));
  EXPECT_THROW(m.val(Cell::app("f", 40)), std::runtime_error);
}

TEST(ModelEval, SampledInstancesHold) {
  INDCERT_REQUIRE_SOLVER();
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> pick(-60, 60);
  for (const char* name : {"prob1.unbounded", "example1.unbounded", "fib.lower", "negcoeff.unbounded"}) {
    std::string n(name);
    auto dot = n.find('.');
    FragmentProblem p = test::load_case(n.substr(0, dot), n.substr(dot + 1));
    ModelEvaluator m(p, golden(n), test::solver());
    for (int i = 0; i < 50; ++i) {
      int z = pick(rng);
      if (!p.guard.contains(z)) continue;
      EXPECT_EQ(m.check_instance(z), Truth::True) << name << " at " << z;
    }
  }
}

TEST(ModelEval, Deterministic) {
  INDCERT_REQUIRE_SOLVER();
  FragmentProblem p = test::load_case("fib", "lower");
  ModelEvaluator a(p, golden("fib.lower"), test::solver());
  ModelEvaluator b(p, golden("fib.lower"), test::solver());
  for (int n : {15, -3, 30, 7}) EXPECT_EQ(a.val(Cell::app("f", n)), b.val(Cell::app("f", n))) << n;
}

TEST(ModelEval, RejectsUnknownSelection) {
  Certificate c = golden("prob1.unbounded");
  c.sel_up = std::vector<std::string>{"(f (+ x 9))"};
  EXPECT_THROW(ModelEvaluator(prob1(), c, test::solver()), std::invalid_argument);
}
