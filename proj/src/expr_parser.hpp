#pragma once

// Recursive-descent parser shared by commutative and Weyl polynomials.
// The context supplies constant(), variable(), and the ring operations.

#include <cctype>
#include <stdexcept>
#include <string>

#include "bdm/exact.hpp"

namespace bdm::detail {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Ctx>
class ExprParser {
 public:
  using Elem = typename Ctx::Elem;

  ExprParser(const std::string& text, const Ctx& ctx) : s_(text), ctx_(ctx) {}

  Elem parse() {
    Elem e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Elem acc = product();
    if (neg) acc = ctx_.neg(acc);
    for (;;) {
      if (eat('+')) acc = ctx_.add(acc, product());
      else if (eat('-')) acc = ctx_.add(acc, ctx_.neg(product()));
      else return acc;
    }
  }

  Elem product() {
    Elem acc = power();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = ctx_.mul(acc, power());
      } else if (eat('/')) {
        Rational d = number();
        if (d == 0) fail("division by zero");
        acc = ctx_.mul(acc, ctx_.constant(1 / d));
      } else if (pos_ < s_.size() &&
                 (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])))) {
        acc = ctx_.mul(acc, power());  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long k = std::stoul(s_.substr(start, pos_ - start));
      return ctx_.pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return Rational(Integer(s_.substr(start, pos_ - start)));
  }

  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ctx_.constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto v = ctx_.variable(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return *v;
    }
    fail("unexpected character");
  }

  std::string s_;
  const Ctx& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace bdm::detail
