#include <cctype>
#include <map>
#include <sstream>

#include "gstrat/dsl.hpp"

namespace gstrat::dsl {

namespace {

std::string describe(Span at) {
  return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column);
}

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) out += (out.empty() ? "" : " or ") + e;
  return out;
}

}  // namespace

ParseError::ParseError(Span at, const std::string& msg, std::set<std::string> expected)
    : std::runtime_error(describe(at) + ": " + msg +
                         (expected.empty() ? "" : ", expected " + join_expected(expected))),
      at_(at),
      expected_(std::move(expected)) {}

EvalError::EvalError(Span at, const std::string& msg)
    : std::runtime_error(describe(at) + ": " + msg), at_(at) {}

bool Expr::operator==(const Expr& o) const {
  return type == o.type && name == o.name && value == o.value && subgroup == o.subgroup &&
         args == o.args;
}

bool Stmt::operator==(const Stmt& o) const {
  return type == o.type && name == o.name && format == o.format && expr == o.expr;
}

// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Semi, Equals, LAngle, RAngle, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Equals: return "'='";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  Span at;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const Span start = at;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c) || (c == '-' && i + 1 < text.size() &&
                            std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, text.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equals; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + text[i] + "'");
    }
    out.push_back({kind, std::string(1, text[i]), start});
    advance(1);
  }
  out.push_back({Tok::End, "", at});
  return out;
}

enum class ArgKind { Space, Int, Subgroup };
enum class ValueType { Space, Int, Report, Iso };

struct Signature {
  std::vector<ArgKind> args;
  ValueType result;
  std::int64_t min_int = 0;  // lower bound of integer arguments
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table{
      {"euclidean", {{ArgKind::Int}, ValueType::Space, 0}},
      {"circle", {{ArgKind::Int}, ValueType::Space, 1}},
      {"rotsphere", {{ArgKind::Int}, ValueType::Space, 1}},
      {"cone", {{ArgKind::Space}, ValueType::Space}},
      {"product", {{ArgKind::Space, ArgKind::Space}, ValueType::Space}},
      {"quotient", {{ArgKind::Space, ArgKind::Subgroup}, ValueType::Space}},
      {"unfold", {{ArgKind::Space}, ValueType::Space}},
      {"unfold_all", {{ArgKind::Space}, ValueType::Space}},
      {"depth", {{ArgKind::Space}, ValueType::Int}},
      {"validate", {{ArgKind::Space}, ValueType::Report}},
      {"iso", {{ArgKind::Space, ArgKind::Space}, ValueType::Iso}},
      {"thom_mather", {{ArgKind::Space}, ValueType::Report}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script out;
    while (peek().kind != Tok::End) out.stmts.push_back(statement());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::set<std::string>& expected) const {
    const auto& t = peek();
    const std::string found =
        t.kind == Tok::End ? "syntax error at end of input" : "syntax error at '" + t.text + "'";
    throw ParseError(t.span, found, expected);
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({tok_name(kind)});
    return take();
  }

  static bool keyword(const std::string& s) {
    return s == "let" || s == "print" || s == "emit";
  }

  Stmt statement() {
    const auto& t = peek();
    if (t.kind != Tok::Ident || !keyword(t.text)) fail({"'emit'", "'let'", "'print'"});
    Stmt st;
    st.span = t.span;
    const auto kw = take().text;
    if (kw == "let") {
      st.type = Stmt::Type::Let;
      const auto id = expect(Tok::Ident);
      if (keyword(id.text) || signatures().count(id.text))
        throw ParseError(id.span, "'" + id.text + "' is reserved");
      if (types_.count(id.text))
        throw ParseError(id.span, "identifier '" + id.text + "' is already bound");
      st.name = id.text;
      expect(Tok::Equals);
      ValueType vt;
      st.expr = expression(vt);
      expect(Tok::Semi);
      types_[st.name] = vt;
    } else if (kw == "print") {
      st.type = Stmt::Type::Print;
      ValueType vt;
      st.expr = expression(vt);
      expect(Tok::Semi);
    } else {
      st.type = Stmt::Type::Emit;
      if (peek().kind != Tok::Ident || (peek().text != "dot" && peek().text != "json"))
        fail({"'dot'", "'json'"});
      st.format = take().text;
      ValueType vt;
      st.expr = expression(vt);
      if (vt != ValueType::Space) throw ParseError(st.expr.span, "emit needs a space");
      expect(Tok::Semi);
    }
    return st;
  }

  Expr expression(ValueType& type) {
    const auto& t = peek();
    if (t.kind != Tok::Ident || keyword(t.text)) fail({"expression"});
    const auto name = take();
    Expr e;
    e.span = name.span;
    e.name = name.text;
    if (peek().kind != Tok::LParen) {
      const auto it = types_.find(name.text);
      if (it == types_.end())
        throw ParseError(name.span, "unbound identifier '" + name.text + "'");
      e.type = Expr::Type::Ident;
      type = it->second;
      return e;
    }
    const auto sig = signatures().find(name.text);
    if (sig == signatures().end()) throw ParseError(name.span, "unknown function '" + name.text + "'");
    e.type = Expr::Type::Call;
    type = sig->second.result;
    take();  // (
    const auto& kinds = sig->second.args;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (i > 0) {
        if (peek().kind == Tok::RParen)
          throw ParseError(peek().span, name.text + " takes " + std::to_string(kinds.size()) +
                                            " arguments");
        expect(Tok::Comma);
      }
      e.args.push_back(argument(kinds[i], sig->second.min_int));
    }
    if (peek().kind == Tok::Comma)
      throw ParseError(peek().span, name.text + " takes " + std::to_string(kinds.size()) +
                                        " argument" + (kinds.size() == 1 ? "" : "s"));
    expect(Tok::RParen);
    return e;
  }

  Expr argument(ArgKind kind, std::int64_t min_int) {
    switch (kind) {
      case ArgKind::Space: {
        ValueType vt;
        const auto at = peek().span;
        auto e = expression(vt);
        if (vt != ValueType::Space) throw ParseError(at, "argument must be a space");
        return e;
      }
      case ArgKind::Int: {
        if (peek().kind != Tok::Int) fail({"integer"});
        const auto t = take();
        Expr e;
        e.type = Expr::Type::Int;
        e.span = t.span;
        e.value = to_int(t);
        if (e.value < min_int)
          throw ParseError(t.span, "integer must be >= " + std::to_string(min_int));
        return e;
      }
      case ArgKind::Subgroup: {
        if (peek().kind != Tok::LAngle) fail({"subgroup literal"});
        Expr e;
        e.type = Expr::Type::Subgroup;
        e.span = take().span;
        do {
          e.subgroup.tuples.push_back(tuple());
        } while (peek().kind == Tok::Comma && (take(), true));
        expect(Tok::RAngle);
        const auto arity = e.subgroup.tuples.front().size();
        for (const auto& t : e.subgroup.tuples)
          if (t.size() != arity) throw ParseError(e.span, "generator tuples differ in length");
        return e;
      }
    }
    fail({"argument"});
  }

  std::vector<std::int64_t> tuple() {
    if (peek().kind == Tok::Int) return {nonnegative(take())};
    if (peek().kind != Tok::LParen) fail({"integer", "'('"});
    take();
    std::vector<std::int64_t> out{nonnegative(expect(Tok::Int))};
    while (peek().kind == Tok::Comma) {
      take();
      out.push_back(nonnegative(expect(Tok::Int)));
    }
    expect(Tok::RParen);
    return out;
  }

  static std::int64_t to_int(const Token& t) {
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw ParseError(t.span, "integer out of range");
    }
  }

  static std::int64_t nonnegative(const Token& t) {
    const auto v = to_int(t);
    if (v < 0) throw ParseError(t.span, "residues must be non-negative");
    return v;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, ValueType> types_;
};

}  // namespace

Script parse(const std::string& text) { return Parser(lex(text)).script(); }

std::string to_source(const Expr& e) {
  switch (e.type) {
    case Expr::Type::Ident: return e.name;
    case Expr::Type::Int: return std::to_string(e.value);
    case Expr::Type::Subgroup: {
      std::string s = "<";
      for (std::size_t i = 0; i < e.subgroup.tuples.size(); ++i) {
        const auto& t = e.subgroup.tuples[i];
        if (i) s += ", ";
        if (t.size() == 1) {
          s += std::to_string(t[0]);
          continue;
        }
        s += '(';
        for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + std::to_string(t[j]);
        s += ')';
      }
      return s + ">";
    }
    case Expr::Type::Call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + to_source(e.args[i]);
      return s + ")";
    }
  }
  return {};
}

std::string to_source(const Script& script) {
  std::ostringstream os;
  for (const auto& st : script.stmts) {
    switch (st.type) {
      case Stmt::Type::Let: os << "let " << st.name << " = "; break;
      case Stmt::Type::Print: os << "print "; break;
      case Stmt::Type::Emit: os << "emit " << st.format << ' '; break;
    }
    os << to_source(st.expr) << ";\n";
  }
  return os.str();
}

}  // namespace gstrat::dsl
