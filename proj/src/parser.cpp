#include "mbfun/parser.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "mbfun/error.hpp"

namespace mbfun {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().line, peek().col); }

  MultiPoly expr() {
    MultiPoly p = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      MultiPoly q = term();
      if (minus) {
        p -= q;
      } else {
        p += q;
      }
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = take();
      const Token& at = peek();
      MultiPoly q = unary();
      if (op.kind == Tok::Star) {
        p *= q;
        continue;
      }
      if (!q.is_constant() || q.is_zero()) {
        throw SyntaxError("division is only allowed by a nonzero constant", at.line, at.col);
      }
      p *= Rational(1) / q.constant_term();
    }
    return p;
  }

  MultiPoly unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek().kind != Tok::Caret) return base;
    take();
    const bool paren = peek().kind == Tok::LParen;
    if (paren) take();
    if (peek().kind == Tok::Minus) fail("negative exponents are not allowed");
    if (peek().kind != Tok::Number) fail("exponent must be a nonnegative integer");
    const Token& e = take();
    if (e.text.size() > 5 || std::stoul(e.text) > 65535) {
      throw SyntaxError("exponent too large", e.line, e.col);
    }
    const auto k = static_cast<unsigned>(std::stoul(e.text));
    if (paren) {
      if (peek().kind != Tok::RParen) fail("expected ')'");
      take();
    }
    if (peek().kind == Tok::Caret) fail("chained exponents need parentheses");
    return base.pow(k);
  }

  MultiPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        take();
        return MultiPoly::constant(vars_, Rational(Integer(t.text)));
      case Tok::Name:
        take();
        return MultiPoly::variable(vars_, t.text);
      case Tok::LParen: {
        take();
        MultiPoly p = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return p;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) {
  auto toks = tokenize(text);
  std::set<std::string> names;
  for (const auto& t : toks) {
    if (t.kind == Tok::Name) names.insert(t.text);
  }
  Parser p(std::move(toks), {names.begin(), names.end()});
  return p.parse();
}

}  // namespace mbfun
