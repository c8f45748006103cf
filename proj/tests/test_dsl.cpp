#include <gtest/gtest.h>

#include "gstrat/dsl.hpp"
#include "gstrat/emit.hpp"

using namespace gstrat;
using namespace gstrat::dsl;

namespace {

std::vector<std::string> run(const std::string& text, EvalOptions options = {}) {
  return eval(parse(text), options);
}

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError({}, "");
}

const char* kScripts[] = {
    "let X = cone(circle(4)); print depth(X);",
    "let X = cone(rotsphere(4));\nprint iso(unfold(quotient(X,<2>)), quotient(unfold(X),<2>));",
    "# comment\nprint validate(product(euclidean(2), cone(circle(3))));",
    "let Y = quotient(cone(rotsphere(6)), <(2), 3>); emit dot Y; emit json unfold_all(Y);",
    "print thom_mather(cone(rotsphere(2)));",
    "",
};

}  // namespace

TEST(Parse, TwoStatements) {
  const auto s = parse("let X = cone(circle(4)); print depth(X);");
  ASSERT_EQ(s.stmts.size(), 2u);
  EXPECT_EQ(s.stmts[0].type, Stmt::Type::Let);
  EXPECT_EQ(s.stmts[0].name, "X");
  EXPECT_EQ(s.stmts[1].type, Stmt::Type::Print);
  EXPECT_EQ(s.stmts[1].expr.name, "depth");
  EXPECT_EQ(s.stmts[1].span.column, 26);
}

TEST(Parse, SyntaxErrorAtEnd) {
  const auto e = parse_error("let X = cone(");
  EXPECT_EQ(e.expected(), (std::set<std::string>{"expression"}));
  EXPECT_EQ(e.where().line, 1);
  EXPECT_EQ(e.where().column, 14);
  EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
}

TEST(Parse, NestedCalls) {
  const auto s = parse("let X = cone(rotsphere(4)); print iso(unfold(quotient(X,<2>)), quotient(unfold(X),<2>));");
  ASSERT_EQ(s.stmts.size(), 2u);
  const auto& iso = s.stmts[1].expr;
  EXPECT_EQ(iso.name, "iso");
  ASSERT_EQ(iso.args.size(), 2u);
  EXPECT_EQ(iso.args[0].args[0].name, "quotient");
  EXPECT_EQ(iso.args[1].args[1].subgroup.tuples, (std::vector<std::vector<std::int64_t>>{{2}}));
}

TEST(Parse, StaticErrors) {
  EXPECT_NE(std::string(parse_error("print depth(Y);").what()).find("unbound"), std::string::npos);
  parse_error("let X = circle(2); let X = circle(3);");
  parse_error("print circle(0);");
  parse_error("print euclidean(-1);");
  parse_error("print cone(circle(2), circle(2));");
  parse_error("print product(circle(2));");
  parse_error("print quotient(circle(4), 2);");
  parse_error("print quotient(circle(4), <(1,0), 1>);");
  parse_error("print depth(depth(circle(2)));");
  parse_error("print frobnicate(circle(2));");
  parse_error("print circle(2)");
  parse_error("emit svg circle(2);");
  parse_error("let cone = circle(2);");
  const auto e = parse_error("print circle(2);\n  $");
  EXPECT_EQ(e.where().line, 2);
  EXPECT_EQ(e.where().column, 3);
}

TEST(Parse, PrettyPrintRoundTrip) {
  for (const char* text : kScripts) {
    const auto a = parse(text);
    const auto printed = to_source(a);
    const auto b = parse(printed);
    EXPECT_EQ(a, b) << text;
    EXPECT_EQ(to_source(b), printed);
  }
}

TEST(Eval, DepthExamples) {
  EXPECT_EQ(run("print depth(cone(circle(4)));"), (std::vector<std::string>{"1"}));
  EXPECT_EQ(run("print depth(quotient(cone(circle(4)), <2>));"), (std::vector<std::string>{"1"}));
  EXPECT_EQ(run("print depth(unfold(cone(rotsphere(4))));"), (std::vector<std::string>{"1"}));
}

TEST(Eval, ReportsAndIso) {
  const auto out = run(kScripts[1]);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].rfind("isomorphic strata=[", 0), 0u);
  EXPECT_EQ(run("print iso(cone(circle(4)), product(euclidean(1), cone(circle(4))));"),
            (std::vector<std::string>{"not isomorphic"}));
  EXPECT_EQ(run("print validate(cone(circle(3)));"), (std::vector<std::string>{"valid"}));
  const auto tm = run("print thom_mather(cone(rotsphere(2)));", {std::nullopt, 500, 1});
  ASSERT_EQ(tm.size(), 1u);
  EXPECT_EQ(tm[0].rfind("pass samples=500", 0), 0u);
}

TEST(Eval, EmitMatchesLibrary) {
  const auto out = run("emit json cone(circle(4)); emit dot cone(circle(4));");
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0] + "\n", emit_json(cone(circle(4))));
  EXPECT_EQ(out[1] + "\n", emit_dot(cone(circle(4))));
  EXPECT_EQ(run("print cone(circle(4));", {std::string("json"), 1, 0})[0] + "\n",
            emit_json(cone(circle(4))));
}

TEST(Eval, ErrorsCarryStatementSpan) {
  try {
    run("let X = cone(circle(4));\nprint quotient(X, <5>);");
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.where().line, 2);
    EXPECT_EQ(e.where().column, 1);
  }
  EXPECT_THROW(run("print cone(euclidean(1));"), EvalError);
  EXPECT_THROW(run("print product(circle(2), circle(2));"), EvalError);
  EXPECT_THROW(run("print thom_mather(unfold(cone(circle(2))));"), EvalError);
}

TEST(Eval, EvaluatorKeepsBindings) {
  Evaluator ev;
  ev.run(parse("let X = cone(circle(6));"));
  EXPECT_EQ(ev.run(parse("let X = cone(circle(6)); print depth(X);")), (std::vector<std::string>{"1"}));
}

TEST(Eval, Deterministic) {
  for (const char* text : kScripts) EXPECT_EQ(run(text), run(text));
}
