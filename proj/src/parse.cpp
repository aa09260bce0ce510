#include "skeleta/parse.hpp"

#include <cctype>
#include <vector>

namespace skeleta {
namespace {

struct Token {
  enum Kind { Number, FieldVar, PolyVar, Op, LParen, RParen, End } kind;
  std::string text;
  std::size_t index = 0;  // zero-based for PolyVar
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s, const std::string& var) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto error = [&](const std::string& what) {
    return DomainError(what + " at position " + std::to_string(i) + " in '" +
                       std::string(s) + "'");
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E'))
        throw error("decimal literals are not accepted");
      out.push_back({Token::Number, std::string(s.substr(i, j - i)), 0, i});
      i = j;
    } else if (c == 'T') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw error("variable T needs an index");
      const long idx = std::stol(std::string(s.substr(i + 1, j - i - 1)));
      if (idx < 1) throw error("variables are numbered from T1");
      out.push_back({Token::PolyVar, std::string(s.substr(i, j - i)),
                     static_cast<std::size_t>(idx - 1), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string name(s.substr(i, j - i));
      if (name != var) throw error("unknown identifier '" + name + "'");
      out.push_back({Token::FieldVar, name, 0, i});
      i = j;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Token::Op, std::string(1, c), 0, i});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", 0, i});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", 0, i});
      ++i;
    } else {
      throw error(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> tokens, std::size_t arity,
         const std::string& var)
      : src_(src), tokens_(std::move(tokens)), arity_(arity), var_(var) {}

  MultivariatePoly parse() {
    MultivariatePoly p = expr();
    if (peek().kind != Token::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept_op(char c) {
    if (peek().kind == Token::Op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError(what + " at position " + std::to_string(peek().pos) + " in '" +
                      std::string(src_) + "'");
  }

  MultivariatePoly expr() {
    MultivariatePoly acc = term();
    for (;;) {
      if (accept_op('+'))
        acc = acc + term();
      else if (accept_op('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultivariatePoly term() {
    MultivariatePoly acc = unary();
    for (;;) {
      if (accept_op('*')) {
        acc = acc * unary();
      } else if (accept_op('/')) {
        MultivariatePoly d = unary();
        if (!d.is_constant()) fail("division by a polynomial in T");
        if (d.is_zero()) fail("division by zero");
        acc = acc * MultivariatePoly::constant(arity_, d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  MultivariatePoly unary() {
    if (accept_op('-')) return -unary();
    if (accept_op('+')) return unary();
    return power();
  }

  MultivariatePoly power() {
    MultivariatePoly base = primary();
    if (!accept_op('^')) return base;
    bool negative = false;
    if (accept_op('-')) negative = true;
    if (peek().kind != Token::Number) fail("exponent must be an integer literal");
    const long k = std::stol(peek().text);
    ++pos_;
    if (negative) {
      if (!base.is_constant()) fail("negative power of a polynomial in T");
      if (base.is_zero()) fail("negative power of zero");
      return MultivariatePoly::constant(arity_, base.constant_term().pow(-k));
    }
    return base.pow(static_cast<unsigned long>(k));
  }

  MultivariatePoly primary() {
    const Token tok = peek();
    switch (tok.kind) {
      case Token::Number:
        ++pos_;
        return MultivariatePoly::constant(arity_, BaseElement(Rational(tok.text, 10)));
      case Token::FieldVar:
        ++pos_;
        return MultivariatePoly::constant(arity_, BaseElement::uniformizer());
      case Token::PolyVar:
        ++pos_;
        return MultivariatePoly::variable(arity_, tok.index);
      case Token::LParen: {
        ++pos_;
        MultivariatePoly inner = expr();
        if (peek().kind != Token::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      default:
        fail("expected a number, variable or '('");
    }
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t arity_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

MultivariatePoly parse_polynomial(std::string_view text, std::optional<std::size_t> arity,
                                  const std::string& var) {
  auto tokens = tokenize(text, var);
  std::size_t needed = 0;
  for (const auto& t : tokens)
    if (t.kind == Token::PolyVar) needed = std::max(needed, t.index + 1);
  if (arity && *arity < needed)
    throw DomainError("'" + std::string(text) + "' uses T" + std::to_string(needed) +
                      " but the arity is " + std::to_string(*arity));
  return Parser(text, std::move(tokens), arity.value_or(needed), var).parse();
}

BaseElement parse_element(std::string_view text, const std::string& var) {
  MultivariatePoly p = parse_polynomial(text, std::size_t{0}, var);
  return p.constant_term();
}

}  // namespace skeleta
