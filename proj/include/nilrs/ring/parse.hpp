#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/scalar.hpp"

namespace nilrs {

/// Hooks that give meaning to identifiers and function calls. The value type
/// V must be constructible from Rational and support + - * / and unary -.
template <class V>
struct ParseContext {
  std::function<std::optional<V>(std::string_view)> identifier;
  std::function<std::optional<V>(std::string_view, const V&)> function = {};
};

namespace detail {

struct Token {
  enum class Kind { Number, Identifier, Op, End } kind;
  std::string text;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](unsigned char ch) { return std::isalnum(ch) || ch == '_' || ch >= 0x80; };
  while (i < src.size()) {
    const auto ch = static_cast<unsigned char>(src[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E')) {
        throw ParseError("floating-point literal in exact expression: " + std::string(src));
      }
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(ch) || ch == '_' || ch >= 0x80) {
      std::size_t j = i;
      while (j < src.size() && ident_char(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Identifier, std::string(src.substr(i, j - i))});
      i = j;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(ch)) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, std::string(1, static_cast<char>(ch))});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(ch)) + "' in: " + std::string(src));
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

template <class V>
class Parser {
 public:
  Parser(std::string_view src, const ParseContext<V>& ctx) : src_(src), tokens_(tokenize(src)), ctx_(ctx) {}

  V parse() {
    V v = expression();
    if (peek().kind != Token::Kind::End) fail("trailing input at '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char op) const { return peek().kind == Token::Kind::Op && peek().text[0] == op; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg + " in: " + std::string(src_)); }

  V expression() {
    V acc = term();
    while (at_op('+') || at_op('-')) {
      const bool minus = at_op('-');
      ++pos_;
      V rhs = term();
      acc = minus ? V(acc - rhs) : V(acc + rhs);
    }
    return acc;
  }

  bool starts_primary() const {
    return peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Identifier || at_op('(');
  }

  V term() {
    V acc = unary();
    for (;;) {
      if (at_op('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (at_op('/')) {
        ++pos_;
        acc = acc / unary();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  V unary() {
    if (at_op('-')) {
      ++pos_;
      return -unary();
    }
    if (at_op('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  V power() {
    V base = primary();
    if (at_op('^')) {
      ++pos_;
      if (peek().kind != Token::Kind::Number) fail("exponent must be a non-negative integer literal");
      const unsigned long e = std::stoul(peek().text);
      ++pos_;
      V result = V(Rational(1));
      for (unsigned long i = 0; i < e; ++i) result = result * base;
      return result;
    }
    return base;
  }

  V primary() {
    const Token tok = peek();
    if (tok.kind == Token::Kind::Number) {
      ++pos_;
      return V(Rational(mpz_class(tok.text)));
    }
    if (tok.kind == Token::Kind::Identifier) {
      ++pos_;
      if (at_op('(') && ctx_.function) {
        const std::size_t save = pos_;
        ++pos_;
        V arg = expression();
        if (!at_op(')')) fail("missing ')'");
        ++pos_;
        if (auto v = ctx_.function(tok.text, arg)) return *v;
        pos_ = save;
      }
      if (auto v = ctx_.identifier(tok.text)) return *v;
      fail("unknown identifier '" + tok.text + "'");
    }
    if (at_op('(')) {
      ++pos_;
      V v = expression();
      if (!at_op(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    fail("unexpected token '" + tok.text + "'");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  const ParseContext<V>& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class V>
V parse_expression(std::string_view text, const ParseContext<V>& ctx) {
  return detail::Parser<V>(text, ctx).parse();
}

/// Resolver for the fixed symbol universe (ASCII or Greek names).
template <class V>
std::optional<V> symbol_value(std::string_view text) {
  if (auto s = symbol_from_name(text)) return V(Scalar::symbol(*s));
  return std::nullopt;
}

/// Parses an exact scalar such as "a2^2/(2*a1)" or "(1 - lambda^2)/(2*lambda)".
inline Scalar parse_scalar(std::string_view text) {
  ParseContext<Scalar> ctx{&symbol_value<Scalar>};
  return parse_expression<Scalar>(text, ctx);
}

}  // namespace nilrs
