#include <gtest/gtest.h>

#include "indcert/sexpr.hpp"

using namespace indcert::sexpr;

TEST(SExpr, ReadsNestedLists) {
  auto all = read_all("(a (b c) 12) d");
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(all[0].is_call("a"));
  ASSERT_EQ(all[0].items.size(), 3u);
  EXPECT_TRUE(all[0].items[1].is_call("b"));
  EXPECT_TRUE(all[0].items[2].is_numeral());
  EXPECT_TRUE(all[1].is_atom("d"));
}

TEST(SExpr, SkipsComments) {
  auto all = read_all("; header\n(x) ; trailing\n; more\n");
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(to_string(all[0]), "(x)");
}

TEST(SExpr, QuotedSymbolsDropBars) {
  auto all = read_all("|a b|");
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].is_atom("a b"));
}

TEST(SExpr, StringsWithDoubledQuotes) {
  auto all = read_all(R"(("z3 ""4"""))");
  ASSERT_EQ(all.size(), 1u);
  ASSERT_EQ(all[0].items.size(), 1u);
  EXPECT_EQ(all[0].items[0].kind, SExpr::Kind::String);
  EXPECT_EQ(all[0].items[0].text, "z3 \"4\"");
  // printing re-escapes
  EXPECT_EQ(to_string(all[0]), R"(("z3 ""4"""))");
}

TEST(SExpr, NumeralRecognition) {
  EXPECT_TRUE(read_all("0")[0].is_numeral());
  EXPECT_TRUE(read_all("123")[0].is_numeral());
  EXPECT_FALSE(read_all("-3")[0].is_numeral());
  EXPECT_FALSE(read_all("x1")[0].is_numeral());
}

TEST(SExpr, ErrorsCarryPositions) {
  try {
    read_all("(a\n  (b c)");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().line, 1u);
    EXPECT_EQ(e.position().column, 1u);
  }
  try {
    read_all("(a)\n  )");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position().line, 2u);
    EXPECT_EQ(e.position().column, 3u);
  }
  EXPECT_THROW(read_all("\"open"), SyntaxError);
  EXPECT_THROW(read_all("|open"), SyntaxError);
}

TEST(SExpr, CompleteDatumLength) {
  EXPECT_FALSE(complete_datum_length(""));
  EXPECT_FALSE(complete_datum_length("(a (b)"));
  EXPECT_EQ(complete_datum_length("(a (b))rest"), 7u);
  // an atom is complete only once delimited
  EXPECT_FALSE(complete_datum_length("sat"));
  EXPECT_EQ(complete_datum_length("sat\n"), 3u);
  EXPECT_EQ(complete_datum_length("  unsat\n"), 7u);
  EXPECT_FALSE(complete_datum_length("; only a comment"));
  EXPECT_FALSE(complete_datum_length("(error \"a)"));
  EXPECT_EQ(complete_datum_length("(error \"a)\")"), 12u);
}

TEST(SExpr, PrintIsReadable) {
  const char* text = "(a (b \"s\") () 1)";
  auto e = read_all(text)[0];
  EXPECT_EQ(to_string(e), text);
  EXPECT_EQ(to_string(read_all(to_string(e))[0]), text);
}
