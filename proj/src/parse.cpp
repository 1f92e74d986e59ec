#include "sgcm/parse.hpp"

#include <cctype>

namespace sgcm {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text), pos_(0) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial syntax error at column " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else (void)eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    while (eat('^')) {
      unsigned e = natural();
      Polynomial r = Polynomial::constant(ring_, 1);
      for (unsigned i = 0; i < e; ++i) r = r * b;
      b = r;
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, mpq_class(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      std::string name = identifier();
      int idx = ring_->var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    fail("expected a variable, number, or '('");
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  mpz_class integer_literal() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  unsigned natural() {
    mpz_class n = integer_literal();
    if (n > 1000) fail("exponent too large");
    return static_cast<unsigned>(n.get_ui());
  }

  RingPtr ring_;
  const std::string& text_;
  size_t pos_;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).run();
}

}  // namespace sgcm
