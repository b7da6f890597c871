#include "pellrep/precision.hpp"

#include <cctype>

namespace pellrep {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RealExpr parse() {
    RealExpr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse expression \"" + text_ + "\" at offset " +
                          std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RealExpr expression() {
    RealExpr e = term();
    for (;;) {
      if (accept('+')) {
        e = e + term();
      } else if (accept('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  RealExpr term() {
    RealExpr e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        e = e / unary();
      } else {
        return e;
      }
    }
  }

  RealExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RealExpr power() {
    RealExpr base = primary();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (accept('-')) negative = true;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    long exponent = std::stol(text_.substr(start, pos_ - start));
    return RealExpr::pow(base, negative ? -exponent : exponent);
  }

  RealExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RealExpr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name == "alpha") return RealExpr::alpha();
      if (name == "beta") return RealExpr::beta();
      if (name == "log") {
        expect('(');
        RealExpr arg = expression();
        expect(')');
        return log(arg);
      }
      if (name == "sqrt") {
        expect('(');
        RealExpr arg = expression();
        expect(')');
        auto value = arg.exact_value();
        if (!value || sgn(*value) < 0) fail("sqrt() takes a non-negative rational constant");
        // sqrt(p/q) = sqrt(p*q)/q
        const mpz_class& den = value->get_den();
        return RealExpr::sqrt_of(value->get_num() * den) / RealExpr(den);
      }
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // Decimal literal such as 12, 0.5 or 1.17e30, read as an exact rational.
  RealExpr number() {
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) --scale;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) fail("malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      const long e = std::stol(text_.substr(start, pos_ - start));
      scale += negative ? -e : e;
    }
    mpq_class value{mpz_class(digits, 10)};
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    if (scale >= 0) {
      value *= ten_pow;
    } else {
      value /= ten_pow;
    }
    value.canonicalize();
    return RealExpr(value);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RealExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace pellrep
