#include "qfano/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qfano {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, const PolyResolver& resolve)
      : s_(text), ring_(ring), resolve_(resolve) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
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

  Poly expr() {
    Poly p = term();
    while (true) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (true) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (d.is_zero() || d.max_degree() != 0) fail("division by a non-constant or zero");
        p *= Rational(1) / d.terms().begin()->second;
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, Rational(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (resolve_) {
        if (auto p = resolve_(name)) return *p;
      }
      if (auto i = ring_->find(name)) return Poly::variable(ring_, *i);
      fail("unknown identifier " + std::string(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  const PolyResolver& resolve_;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, const PolyResolver& resolve) {
  return Parser(text, ring, resolve).run();
}

}  // namespace qfano
