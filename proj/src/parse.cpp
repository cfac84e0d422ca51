#include "sl1/parse.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace sl1 {

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

namespace {

enum class Tok : std::uint8_t {
  LParen, RParen, Not, And, Or, Star, Wand, Impl, Iff, Eq, PointsTo, Hooks,
  Ge, Minus, HBar, UBar, Dot, Comma, Nat, Ident,
  KwEmp, KwTrue, KwFalse, KwAlloc, KwExists, KwForall, KwInf,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Star: return "'*'";
    case Tok::Wand: return "'-*'";
    case Tok::Impl: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Eq: return "'='";
    case Tok::PointsTo: return "'|->'";
    case Tok::Hooks: return "'~>'";
    case Tok::Ge: return "'>='";
    case Tok::Minus: return "'-'";
    case Tok::HBar: return "'|h|'";
    case Tok::UBar: return "'|U|'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Nat: return "number";
    case Tok::Ident: return "identifier";
    case Tok::KwEmp: return "'emp'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwAlloc: return "'alloc'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwInf: return "'inf'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t nat = 0;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i + j < s.size() && s[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  auto peek = [&](std::size_t off) -> char {
    return i + off < s.size() ? s[i + off] : '\0';
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    switch (c) {
      case '(': t.kind = Tok::LParen; bump(1); out.push_back(t); continue;
      case ')': t.kind = Tok::RParen; bump(1); out.push_back(t); continue;
      case '!': t.kind = Tok::Not; bump(1); out.push_back(t); continue;
      case '&': t.kind = Tok::And; bump(1); out.push_back(t); continue;
      case '*': t.kind = Tok::Star; bump(1); out.push_back(t); continue;
      case '.': t.kind = Tok::Dot; bump(1); out.push_back(t); continue;
      case ',': t.kind = Tok::Comma; bump(1); out.push_back(t); continue;
      case '=': t.kind = Tok::Eq; bump(1); out.push_back(t); continue;
      case '|':
        if (peek(1) == 'h' && peek(2) == '|') {
          t.kind = Tok::HBar; bump(3);
        } else if (peek(1) == 'U' && peek(2) == '|') {
          t.kind = Tok::UBar; bump(3);
        } else if (peek(1) == '-' && peek(2) == '>') {
          t.kind = Tok::PointsTo; bump(3);
        } else {
          t.kind = Tok::Or; bump(1);
        }
        out.push_back(t);
        continue;
      case '-':
        if (peek(1) == '*') {
          t.kind = Tok::Wand; bump(2);
        } else if (peek(1) == '>') {
          t.kind = Tok::Impl; bump(2);
        } else {
          t.kind = Tok::Minus; bump(1);
        }
        out.push_back(t);
        continue;
      case '<':
        if (peek(1) == '-' && peek(2) == '>') {
          t.kind = Tok::Iff; bump(3); out.push_back(t); continue;
        }
        throw ParseError(line, col, "stray '<'");
      case '>':
        if (peek(1) == '=') {
          t.kind = Tok::Ge; bump(2); out.push_back(t); continue;
        }
        throw ParseError(line, col, "stray '>'");
      case '~':
        if (peek(1) == '>') {
          t.kind = Tok::Hooks; bump(2); out.push_back(t); continue;
        }
        throw ParseError(line, col, "stray '~'");
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
        ++j;
      }
      t.kind = Tok::Nat;
      t.nat = v;
      bump(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string w = s.substr(i, j - i);
      if (w == "emp") t.kind = Tok::KwEmp;
      else if (w == "true") t.kind = Tok::KwTrue;
      else if (w == "false") t.kind = Tok::KwFalse;
      else if (w == "alloc") t.kind = Tok::KwAlloc;
      else if (w == "exists") t.kind = Tok::KwExists;
      else if (w == "forall") t.kind = Tok::KwForall;
      else if (w == "inf") t.kind = Tok::KwInf;
      else { t.kind = Tok::Ident; t.text = w; }
      bump(j - i);
      out.push_back(t);
      continue;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  SLFormula sl() {
    SLFormula f = sl_iff();
    expect(Tok::End, "trailing input");
    return f;
  }
  FOFormula fo() {
    FOFormula f = fo_iff();
    expect(Tok::End, "trailing input");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(cur().line, cur().col,
                       std::string("expected ") + tok_name(k) + " (" + what + "), got " +
                           tok_name(cur().kind));
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }
  std::string variable() {
    Token t = expect(Tok::Ident, "variable name");
    return t.text;
  }

  // ---- SL ----
  SLFormula sl_iff() {
    SLFormula f = sl_impl();
    while (accept(Tok::Iff)) f = SLFormula::iff(f, sl_impl());
    return f;
  }
  SLFormula sl_impl() {
    SLFormula f = sl_or();
    if (accept(Tok::Impl)) return SLFormula::impl(f, sl_impl());
    return f;
  }
  SLFormula sl_or() {
    SLFormula f = sl_and();
    while (accept(Tok::Or)) f = SLFormula::disj(f, sl_and());
    return f;
  }
  SLFormula sl_and() {
    SLFormula f = sl_star();
    while (accept(Tok::And)) f = SLFormula::conj(f, sl_star());
    return f;
  }
  SLFormula sl_star() {
    SLFormula f = sl_wand();
    while (accept(Tok::Star)) f = SLFormula::star(f, sl_wand());
    return f;
  }
  SLFormula sl_wand() {
    SLFormula f = sl_neg();
    if (accept(Tok::Wand)) return SLFormula::wand(f, sl_wand());
    return f;
  }
  SLFormula sl_neg() {
    if (accept(Tok::Not)) return SLFormula::negation(sl_neg());
    return sl_primary();
  }
  SLFormula sl_binder(bool universal) {
    std::vector<std::string> vars;
    vars.push_back(variable());
    while (accept(Tok::Comma)) vars.push_back(variable());
    expect(Tok::Dot, "binder body");
    SLFormula body = sl_iff();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = universal ? SLFormula::forall(*it, body) : SLFormula::exists(*it, body);
    return body;
  }
  SLFormula sl_primary() {
    if (accept(Tok::LParen)) {
      SLFormula f = sl_iff();
      expect(Tok::RParen, "closing paren");
      return f;
    }
    if (accept(Tok::KwExists)) return sl_binder(false);
    if (accept(Tok::KwForall)) return sl_binder(true);
    if (accept(Tok::KwEmp)) return SLFormula::emp();
    if (accept(Tok::KwTrue)) return SLFormula::tt();
    if (accept(Tok::KwFalse)) return SLFormula::ff();
    if (accept(Tok::KwAlloc)) {
      expect(Tok::LParen, "alloc argument");
      std::string x = variable();
      expect(Tok::RParen, "alloc argument");
      return SLFormula::alloc(x);
    }
    if (accept(Tok::HBar)) {
      expect(Tok::Ge, "heap cardinality atom");
      if (accept(Tok::KwInf)) return SLFormula::heap_ge(NatInf::inf());
      if (at(Tok::Nat)) return SLFormula::heap_ge(toks_[pos_++].nat);
      expect(Tok::UBar, "|h| >= |U| - n");
      expect(Tok::Minus, "|h| >= |U| - n");
      Token n = expect(Tok::Nat, "|h| >= |U| - n");
      return SLFormula::heap_ge_univ_minus(n.nat);
    }
    if (accept(Tok::UBar)) {
      expect(Tok::Ge, "universe cardinality atom");
      Token n = expect(Tok::Nat, "universe bound");
      return SLFormula::univ_ge(n.nat);
    }
    if (at(Tok::Ident)) {
      std::string x = toks_[pos_++].text;
      if (accept(Tok::Eq)) return SLFormula::eq(x, variable());
      if (accept(Tok::PointsTo)) return SLFormula::points_to(x, variable());
      if (accept(Tok::Hooks)) return SLFormula::hooks(x, variable());
      fail("expected '=', '|->' or '~>' after variable '" + x + "'");
    }
    fail(std::string("expected a formula, got ") + tok_name(cur().kind));
  }

  // ---- FO ----
  FOFormula fo_iff() {
    FOFormula f = fo_impl();
    while (accept(Tok::Iff)) f = FOFormula::iff(f, fo_impl());
    return f;
  }
  FOFormula fo_impl() {
    FOFormula f = fo_or();
    if (accept(Tok::Impl)) return FOFormula::impl(f, fo_impl());
    return f;
  }
  FOFormula fo_or() {
    FOFormula f = fo_and();
    while (accept(Tok::Or)) f = FOFormula::disj(f, fo_and());
    return f;
  }
  FOFormula fo_and() {
    FOFormula f = fo_neg();
    while (accept(Tok::And)) f = FOFormula::conj(f, fo_neg());
    return f;
  }
  FOFormula fo_neg() {
    if (accept(Tok::Not)) return FOFormula::negation(fo_neg());
    return fo_primary();
  }
  FOFormula fo_binder(bool universal) {
    std::vector<std::string> vars;
    vars.push_back(fo_variable());
    while (accept(Tok::Comma)) vars.push_back(fo_variable());
    expect(Tok::Dot, "binder body");
    FOFormula body = fo_iff();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = universal ? FOFormula::forall(*it, body) : FOFormula::exists(*it, body);
    return body;
  }
  std::string fo_variable() {
    Token t = expect(Tok::Ident, "variable name");
    if (t.text == "f") throw ParseError(t.line, t.col, "'f' is reserved for the function symbol");
    return t.text;
  }
  FOTerm fo_term() {
    Token t = expect(Tok::Ident, "term");
    if (t.text == "f") {
      expect(Tok::LParen, "function argument");
      FOTerm inner = fo_term();
      expect(Tok::RParen, "function argument");
      return FOTerm::app(inner);
    }
    return FOTerm::mkvar(t.text);
  }
  FOFormula fo_primary() {
    if (accept(Tok::LParen)) {
      FOFormula f = fo_iff();
      expect(Tok::RParen, "closing paren");
      return f;
    }
    if (accept(Tok::KwExists)) return fo_binder(false);
    if (accept(Tok::KwForall)) return fo_binder(true);
    if (accept(Tok::KwTrue)) return FOFormula::tt();
    if (accept(Tok::KwFalse)) return FOFormula::ff();
    if (at(Tok::Ident)) {
      // PNAME(t) is a predicate atom when the name is not the function symbol.
      if (cur().text != "f" && pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Tok::LParen) {
        std::string p = toks_[pos_++].text;
        expect(Tok::LParen, "predicate argument");
        FOTerm arg = fo_term();
        expect(Tok::RParen, "predicate argument");
        return FOFormula::pred(p, arg);
      }
      FOTerm lhs = fo_term();
      expect(Tok::Eq, "equation");
      return FOFormula::eq(lhs, fo_term());
    }
    fail(std::string("expected a formula, got ") + tok_name(cur().kind));
  }
};

}  // namespace

SLFormula parse_sl(const std::string& text) { return Parser(text).sl(); }
FOFormula parse_fo(const std::string& text) { return Parser(text).fo(); }

}  // namespace sl1
