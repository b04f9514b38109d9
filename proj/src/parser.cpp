#include "parser.hpp"

#include "errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qfiber {

namespace {

enum class Tok { End, LParen, RParen, Comma, Equals, Bang, Amp, Pipe, Ident, Number };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

private:
  void next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    const char c = s_[i_];
    switch (c) {
      case '(':
        tok_ = {Tok::LParen, "(", start};
        ++i_;
        return;
      case ')':
        tok_ = {Tok::RParen, ")", start};
        ++i_;
        return;
      case ',':
        tok_ = {Tok::Comma, ",", start};
        ++i_;
        return;
      case '=':
        tok_ = {Tok::Equals, "=", start};
        ++i_;
        return;
      case '!':
        tok_ = {Tok::Bang, "!", start};
        ++i_;
        return;
      case '&':
        tok_ = {Tok::Amp, "&", start};
        ++i_;
        return;
      case '|':
        tok_ = {Tok::Pipe, "|", start};
        ++i_;
        return;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      tok_ = {Tok::Number, std::string(s_.substr(start, i_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      tok_ = {Tok::Ident, std::string(s_.substr(start, i_ - start)), start};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Token tok_{};
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Term term_entry() {
    Term t = term();
    expect_end();
    return t;
  }

  Formula formula_entry() {
    Formula f = or_expr();
    expect_end();
    return f;
  }

private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("unexpected trailing input '" + lex_.peek().text + "'",
                       lex_.peek().pos);
  }

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind)
      throw ParseError(std::string("expected ") + what + " before '" + lex_.peek().text + "'",
                       lex_.peek().pos);
    return lex_.take();
  }

  std::vector<Term> argument_list(const std::string& symbol, std::size_t arity,
                                  std::size_t open_pos) {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    if (lex_.peek().kind != Tok::RParen) {
      args.push_back(term());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(term());
      }
    }
    expect(Tok::RParen, "')'");
    if (args.size() != arity)
      throw ParseError(symbol + " expects " + std::to_string(arity) + " arguments, got " +
                           std::to_string(args.size()),
                       open_pos);
    return args;
  }

  Term term() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number:
        if (t.text == "0") {
          lex_.take();
          return Term::zero();
        }
        if (t.text == "1") {
          lex_.take();
          return Term::one();
        }
        throw ParseError("only the constants 0 and 1 exist, got '" + t.text + "'", t.pos);
      case Tok::Ident: {
        if (t.text == "f") {
          Token head = lex_.take();
          std::vector<Term> args = argument_list("f", 3, head.pos);
          return Term::app(args[0], args[1], args[2]);
        }
        if (t.text == "R")
          throw ParseError("R is a relation symbol and cannot appear inside a term", t.pos);
        if (t.text == "psi")
          throw ParseError("psi is a formula and cannot appear inside a term", t.pos);
        return Term::var(lex_.take().text);
      }
      default:
        throw ParseError("expected a term before '" + t.text + "'", t.pos);
    }
  }

  Formula or_expr() {
    Formula f = and_expr();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = Formula::disj(std::move(f), and_expr());
    }
    return f;
  }

  Formula and_expr() {
    Formula f = unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (lex_.peek().kind == Tok::Bang) {
      lex_.take();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      Formula f = or_expr();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident && t.text == "R") {
      Token head = lex_.take();
      std::vector<Term> args = argument_list("R", 2, head.pos);
      return Formula::rel(args[0], args[1]);
    }
    if (t.kind == Tok::Ident && t.text == "psi") {
      Token head = lex_.take();
      std::vector<Term> args = argument_list("psi", 1, head.pos);
      return Formula::psi(args[0]);
    }
    Term lhs = term();
    expect(Tok::Equals, "'='");
    Term rhs = term();
    return Formula::eq(std::move(lhs), std::move(rhs));
  }

  Lexer lex_;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).term_entry(); }

Formula parse_formula(std::string_view text) { return Parser(text).formula_entry(); }

}  // namespace qfiber
