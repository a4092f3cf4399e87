#include "subop/parser.hpp"

#include <cctype>
#include <vector>

namespace subop {

namespace {

struct Token {
  enum class Kind { Ident, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& source) : src_(source) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.column, msg);
  }

 private:
  void advance() {
    skip_trivia();
    tok_ = {Token::Kind::End, "", line_, col_};
    if (pos_ >= src_.size()) return;

    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start), tok_.line, tok_.column};
      return;
    }
    // Two-character operators <: and :> come before the single < and >.
    if (pos_ + 1 < src_.size()) {
      std::string two = src_.substr(pos_, 2);
      if (two == "<:" || two == ":>") {
        bump();
        bump();
        tok_ = {Token::Kind::Symbol, two, tok_.line, tok_.column};
        return;
      }
    }
    if (c == '<' || c == '>' || c == '{' || c == '}' || c == '?') {
      bump();
      tok_ = {Token::Kind::Symbol, std::string(1, c), tok_.line, tok_.column};
      return;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

bool is_keyword(const std::string& s) {
  return s == "class" || s == "extends" || s == "super";
}

bool is_reserved_class_name(const std::string& s) {
  return s == kObjectName || s == kNullName || s == "O" || s == "N";
}

Token expect_ident(Lexer& lex, const std::string& what) {
  if (lex.peek().kind != Token::Kind::Ident || is_keyword(lex.peek().text))
    lex.fail("expected " + what);
  return lex.take();
}

void expect_symbol(Lexer& lex, const std::string& sym) {
  if (lex.peek().kind != Token::Kind::Symbol || lex.peek().text != sym)
    lex.fail("expected '" + sym + "'");
  lex.take();
}

std::string resolve_alias(const std::string& name) {
  if (name == "O") return kObjectName;
  if (name == "N") return kNullName;
  return name;
}

GroundType parse_type_expr(Lexer& lex, const ClassTable& table);

TypeArg parse_type_arg(Lexer& lex, const ClassTable& table) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::Symbol && t.text == "?") {
    lex.take();
    const Token& next = lex.peek();
    if (next.kind == Token::Kind::Symbol && next.text == "<:") {
      lex.take();
      return TypeArg::extends(parse_type_expr(lex, table));
    }
    if (next.kind == Token::Kind::Symbol && next.text == ":>") {
      lex.take();
      return TypeArg::super(parse_type_expr(lex, table));
    }
    if (next.kind == Token::Kind::Ident && next.text == "extends") {
      lex.take();
      return TypeArg::extends(parse_type_expr(lex, table));
    }
    if (next.kind == Token::Kind::Ident && next.text == "super") {
      lex.take();
      return TypeArg::super(parse_type_expr(lex, table));
    }
    return TypeArg::unbounded();
  }
  return TypeArg::invariant(parse_type_expr(lex, table));
}

GroundType parse_type_expr(Lexer& lex, const ClassTable& table) {
  Token head = expect_ident(lex, "a type name");
  std::string name = resolve_alias(head.text);
  if (!table.knows(name))
    throw ParseError(head.line, head.column, "unknown class '" + head.text + "'");

  if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "<") {
    if (table.arity(name) != 1)
      throw ParseError(head.line, head.column,
                       "non-generic class '" + head.text + "' given a type argument");
    lex.take();
    TypeArg arg = parse_type_arg(lex, table);
    expect_symbol(lex, ">");
    return GroundType::generic(name, std::move(arg));
  }
  if (table.arity(name) != 0)
    throw ParseError(head.line, head.column,
                     "generic class '" + head.text + "' used without a type argument");
  return GroundType::named(name);
}

}  // namespace

ClassTable parse_program(const std::string& source) {
  Lexer lex(source);
  ClassTable table;

  while (lex.peek().kind != Token::Kind::End) {
    if (lex.peek().kind != Token::Kind::Ident || lex.peek().text != "class")
      lex.fail("expected 'class'");
    lex.take();

    Token name = expect_ident(lex, "a class name");
    if (is_reserved_class_name(name.text))
      throw ParseError(name.line, name.column,
                       "cannot declare builtin class '" + name.text + "'");
    if (table.declares(name.text))
      throw ParseError(name.line, name.column, "duplicate class '" + name.text + "'");

    int arity = 0;
    std::string type_param;
    if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "<") {
      lex.take();
      type_param = expect_ident(lex, "a type parameter name").text;
      expect_symbol(lex, ">");
      arity = 1;
    }

    if (lex.peek().kind != Token::Kind::Ident || lex.peek().text != "extends")
      lex.fail("expected 'extends'");
    lex.take();

    Token super = expect_ident(lex, "a superclass name");
    std::string super_name = resolve_alias(super.text);
    if (super_name != kObjectName) {
      if (super_name == kNullName)
        throw ParseError(super.line, super.column, "cannot extend Null");
      if (!table.declares(super_name))
        throw ParseError(super.line, super.column,
                         "unknown superclass '" + super.text + "'");
      if (table.arity(super_name) != 0)
        throw ParseError(super.line, super.column,
                         "cannot extend generic class '" + super.text + "'");
      if (arity == 1)
        throw ParseError(super.line, super.column,
                         "generic class '" + name.text + "' must extend Object");
    }

    expect_symbol(lex, "{");
    expect_symbol(lex, "}");
    table.add({name.text, arity, super_name, type_param});
  }
  return table;
}

GroundType parse_type(const std::string& source, const ClassTable& table) {
  Lexer lex(source);
  GroundType t = parse_type_expr(lex, table);
  if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input after type");
  return canonicalize(table, t);
}

}  // namespace subop
