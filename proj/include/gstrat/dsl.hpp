#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstrat/model.hpp"
#include "gstrat/space.hpp"

namespace gstrat::dsl {

struct Span {
  int line = 1;
  int column = 1;
};

/// Syntax or binding error. Carries the position and, for syntax errors,
/// the set of tokens that would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(Span at, const std::string& msg, std::set<std::string> expected = {});

  Span where() const noexcept { return at_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  Span at_;
  std::set<std::string> expected_;
};

/// Error raised while evaluating a statement; `where()` is the statement span.
class EvalError : public std::runtime_error {
 public:
  EvalError(Span at, const std::string& msg);
  Span where() const noexcept { return at_; }

 private:
  Span at_;
};

/// Generator tuples; a bare integer is a 1-tuple.
struct SubgroupLiteral {
  std::vector<std::vector<std::int64_t>> tuples;
  bool operator==(const SubgroupLiteral&) const = default;
};

struct Expr {
  enum class Type { Call, Ident, Int, Subgroup };
  Type type = Type::Int;
  std::string name;  // callee or identifier
  std::int64_t value = 0;
  SubgroupLiteral subgroup;
  std::vector<Expr> args;
  Span span;

  /// Structural equality; spans are ignored.
  bool operator==(const Expr& o) const;
};

struct Stmt {
  enum class Type { Let, Print, Emit };
  Type type = Type::Print;
  std::string name;    // bound identifier for Let
  std::string format;  // "dot" or "json" for Emit
  Expr expr;
  Span span;

  bool operator==(const Stmt& o) const;
};

struct Script {
  std::vector<Stmt> stmts;
  bool operator==(const Script&) const = default;
};

/// script := stmt* ;
/// stmt   := "let" ID "=" expr ";" | "print" expr ";" | "emit" ("dot"|"json") expr ";"
/// expr   := NAME "(" args ")" | ID
/// Arguments are expressions, integers or subgroup literals "<" tuple ("," tuple)* ">".
/// Lines starting with '#' are comments.
Script parse(const std::string& text);

/// Canonical source text; parse(print(parse(t))) == parse(t).
std::string to_source(const Script& script);
std::string to_source(const Expr& expr);

struct EvalOptions {
  /// When set, printed spaces are rendered as "dot" or "json" instead of a summary.
  std::optional<std::string> emit;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

/// A space value: the poset model, its numeric realization when the
/// expression only uses realizable constructors, and the provenance map
/// of the last unfolding that produced it.
struct SpaceValue {
  StratSpace space;
  std::optional<model::RealizedSpace> realized;
  std::vector<std::size_t> provenance;
};

/// Stateful evaluator; bindings persist across `run` calls (used by the REPL).
class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});

  /// Evaluates statements in order and returns one rendered result per
  /// print/emit statement.
  std::vector<std::string> run(const Script& script);

 private:
  struct State;
  std::shared_ptr<State> state_;
};

std::vector<std::string> eval(const Script& script, const EvalOptions& options = {});

/// Multi-line human summary of a space.
std::string summarize(const StratSpace& x);

}  // namespace gstrat::dsl
