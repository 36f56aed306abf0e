#include <gtest/gtest.h>

#include "indcert/parser.hpp"

using namespace indcert;

namespace {

const char* kProblem1 =
    "(declare-fun f (Int) Int)"
    "(assert (= (f 4) 7))"
    "(assert (forall ((x Int)) (= (f (+ x 1)) (+ (f x) 1))))";

}  // namespace

TEST(Parser, ProblemOne) {
  Script s = parse_script(kProblem1);
  ASSERT_EQ(s.assertions.size(), 2u);
  EXPECT_EQ(s.functions.at("f"), 1u);
  EXPECT_EQ(to_string(s.assertions[0]), "(= (f 4) 7)");
  EXPECT_EQ(to_string(s.assertions[1]), "(forall ((x Int)) (= (f (+ x 1)) (+ (f x) 1)))");
  EXPECT_EQ(s.formula.kind(), Formula::Kind::And);
}

TEST(Parser, AssertTrue) { EXPECT_TRUE(parse("(assert true)").is_true()); }

TEST(Parser, NoAssertionsIsTrue) { EXPECT_TRUE(parse("(set-logic UFLIA)(check-sat)").is_true()); }

TEST(Parser, OutOfFragmentStillParses) {
  Formula f = parse("(declare-fun f (Int) Int)(assert (forall ((x Int)) (= (f (+ (* 2 x) 3)) (f (+ x 1)))))");
  EXPECT_EQ(f.kind(), Formula::Kind::Forall);
}

TEST(Parser, IgnoredCommands) {
  Formula f = parse(
      "(set-info :status sat)(set-option :produce-models true)(set-logic UFLIA)"
      "(declare-const c Int)(assert (>= c 5))(check-sat)(exit)");
  EXPECT_EQ(to_string(f), "(>= c 5)");
}

TEST(Parser, NullaryDeclareFunIsConstant) {
  Script s = parse_script("(declare-fun c () Int)(assert (= c 1))");
  EXPECT_TRUE(s.constants.count("c"));
}

TEST(Parser, ArithmeticSpellings) {
  EXPECT_EQ(parse_term("(- 3)"), Term::num(-3));
  EXPECT_EQ(to_string(parse_term("(* x 2)", {"x"})), to_string(parse_term("(* 2 x)", {"x"})));
  EXPECT_EQ(to_string(parse_term("(- x 1)", {"x"})), "(+ x (- 1))");
  EXPECT_EQ(to_string(parse_formula("(=> (<= 0 x) (> x (- 1)))", {"x"})), "(=> (<= 0 x) (> x (- 1)))");
}

TEST(Parser, ConnectivesAndDistinct) {
  Formula f = parse_formula("(and (or (= a 1) (not (= c 1))) (distinct c d))");
  EXPECT_EQ(f.kind(), Formula::Kind::And);
  EXPECT_EQ(f.parts()[1].rel(), Rel::Ne);
}

TEST(Parser, SyntaxErrorsHavePositions) {
  try {
    parse("(assert (= c 1)\n(assert (= c 2))");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().line, 1u);
  }
  EXPECT_THROW(parse("(assert (= (f 1 2) 0)) (declare-fun f (Int) Int)"), SyntaxError);
  EXPECT_THROW(parse("(declare-const c Int)(declare-const c Int)"), SyntaxError);
  EXPECT_THROW(parse("(assert (+ 1 2))"), SyntaxError);
}

TEST(Parser, UnsupportedConstructs) {
  EXPECT_THROW(parse("(declare-const b Bool)"), UnsupportedConstruct);
  EXPECT_THROW(parse("(declare-fun a (Int) Real)"), UnsupportedConstruct);
  EXPECT_THROW(parse("(declare-const c Int)(assert (= (* c c) 4))"), UnsupportedConstruct);
  EXPECT_THROW(parse("(assert (let ((y 1)) (= y 1)))"), UnsupportedConstruct);
  EXPECT_THROW(parse("(assert (= (ite true 1 2) 1))"), UnsupportedConstruct);
  EXPECT_THROW(parse("(assert (= 1.5 1))"), UnsupportedConstruct);
  EXPECT_THROW(parse("(assert (distinct 1 2 3))"), UnsupportedConstruct);
  EXPECT_THROW(parse("(push 1)"), UnsupportedConstruct);
}

TEST(Parser, ReservedNames) {
  EXPECT_TRUE(is_reserved_symbol("p_up!0"));
  EXPECT_FALSE(is_reserved_symbol("p_up"));
  EXPECT_THROW(parse("(declare-const u!1 Int)"), UnsupportedConstruct);
}

TEST(Parser, UndeclaredSymbolsAreInferred) {
  Script s = parse_script("(assert (= (g c) 0))");
  EXPECT_TRUE(s.constants.count("c"));
  EXPECT_EQ(s.functions.at("g"), 1u);
  EXPECT_THROW(parse("(assert (= (g 1) g))"), SyntaxError);
}

TEST(Parser, MultiVariableBinderNests) {
  Formula f = parse("(declare-fun f (Int) Int)(assert (forall ((y Int) (z Int)) (= (f y) (f z))))");
  ASSERT_EQ(f.kind(), Formula::Kind::Forall);
  EXPECT_EQ(f.name(), "y");
  EXPECT_EQ(f.body().kind(), Formula::Kind::Forall);
}

TEST(Parser, RoundTripOfPrintedScript) {
  Formula f = parse(kProblem1);
  EXPECT_EQ(parse_formula(to_string(f)), f);
}
