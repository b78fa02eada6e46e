// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include "rewlab/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace rewlab {

namespace {

enum class Tok { Lambda, Ident, Colon, Dot, LParen, RParen, Arrow, DoubleArrow, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : src_(s) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= src_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = src_[i_];
    if (c == '\\') {
      ++i_;
      current_ = {Tok::Lambda, "\\", start};
    } else if (starts_with("\xce\xbb")) {  // λ
      i_ += 2;
      current_ = {Tok::Lambda, "\\", start};
    } else if (c == ':') {
      ++i_;
      current_ = {Tok::Colon, ":", start};
    } else if (c == '.') {
      ++i_;
      current_ = {Tok::Dot, ".", start};
    } else if (c == '(') {
      ++i_;
      current_ = {Tok::LParen, "(", start};
    } else if (c == ')') {
      ++i_;
      current_ = {Tok::RParen, ")", start};
    } else if (starts_with("->") || starts_with("\xe2\x86\x92")) {  // →
      i_ += src_[i_] == '-' ? 2 : 3;
      current_ = {Tok::Arrow, "->", start};
    } else if (starts_with("=>") || starts_with("\xe2\x87\x92")) {  // ⇒
      i_ += src_[i_] == '=' ? 2 : 3;
      current_ = {Tok::DoubleArrow, "=>", start};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
              src_[j] == '\''))
        ++j;
      current_ = {Tok::Ident, src_.substr(i_, j - i_), start};
      i_ = j;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                       std::to_string(i_));
    }
  }

  bool starts_with(const char* s) const {
    return src_.compare(i_, std::string::traits_type::length(s), s) == 0;
  }

  const std::string& src_;
  size_t i_ = 0;
  Token current_{Tok::End, "", 0};
};

class Parser {
public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Term term() {
    if (lex_.peek().kind == Tok::Lambda) {
      lex_.take();
      Token name = expect(Tok::Ident, "binder name");
      expect(Tok::Colon, "':'");
      Type ann = type();
      expect(Tok::Dot, "'.'");
      return Term::lam(name.text, ann, term());
    }
    Term lhs = appseq();
    if (lex_.peek().kind == Tok::Arrow || lex_.peek().kind == Tok::DoubleArrow) {
      Token arrow = lex_.take();
      auto dom = as_type(lhs);
      if (!dom)
        throw ParseError("left operand of '" + arrow.text +
                         "' must be a type (offset " + std::to_string(arrow.pos) + ")");
      return Term::arrow_abs(*dom, term());
    }
    return lhs;
  }

  Type type() {
    Type lhs = type_atom();
    if (lex_.peek().kind == Tok::Arrow || lex_.peek().kind == Tok::DoubleArrow) {
      lex_.take();
      return Type::arrow(lhs, type());
    }
    return lhs;
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input at offset " + std::to_string(lex_.peek().pos));
  }

private:
  Term appseq() {
    Term t = atom();
    while (is_atom_start(lex_.peek().kind)) t = Term::app(t, atom());
    return t;
  }

  static bool is_atom_start(Tok k) {
    return k == Tok::Ident || k == Tok::LParen;
  }

  Term atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Ident:
        if (t.text == "A") return Term::ty_base();
        if (t.text == "a") return Term::constant_a();
        if (t.text == "f") return Term::constant_f();
        return Term::var(t.text);
      case Tok::LParen: {
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a term at offset " + std::to_string(t.pos));
    }
  }

  Type type_atom() {
    Token t = lex_.take();
    if (t.kind == Tok::Ident && t.text == "A") return Type::base();
    if (t.kind == Tok::LParen) {
      Type inner = type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError("expected a type at offset " + std::to_string(t.pos));
  }

  Token expect(Tok k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k)
      throw ParseError(std::string("expected ") + what + " at offset " +
                       std::to_string(t.pos));
    return t;
  }

  Lexer lex_;
};

// Printer precedence levels: lambda/arrow bodies are weakest, application
// binds tighter, atoms strongest.
enum class Prec { Weak, AppLeft, AppRight };

void print_rec(const Term& m, Prec prec, std::string& out) {
  switch (m.kind()) {
    case Term::Kind::Var: out += m.name(); return;
    case Term::Kind::ConstA: out += 'a'; return;
    case Term::Kind::ConstF: out += 'f'; return;
    case Term::Kind::TyBase: out += 'A'; return;
    case Term::Kind::Lam: {
      bool paren = prec != Prec::Weak;
      if (paren) out += '(';
      out += '\\';
      out += m.name();
      out += ':';
      out += m.ann().str();
      out += ". ";
      print_rec(m.body(), Prec::Weak, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::ArrowAbs: {
      bool paren = prec != Prec::Weak;
      if (paren) out += '(';
      std::string dom = m.ann().str();
      if (m.ann().is_arrow()) dom = "(" + dom + ")";
      out += dom;
      out += is_type(m) ? "->" : "=>";
      print_rec(m.body(), Prec::Weak, out);
      if (paren) out += ')';
      return;
    }
    case Term::Kind::App: {
      bool paren = prec == Prec::AppRight;
      if (paren) out += '(';
      print_rec(m.fun(), Prec::AppLeft, out);
      out += ' ';
      print_rec(m.arg(), Prec::AppRight, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(const std::string& input) {
  Parser p(input);
  Term t = p.term();
  p.expect_end();
  return t;
}

Type parse_type(const std::string& input) {
  Parser p(input);
  Type t = p.type();
  p.expect_end();
  return t;
}

std::string print_term(const Term& m) {
  std::string out;
  print_rec(m, Prec::Weak, out);
  return out;
}

}  // namespace rewlab
