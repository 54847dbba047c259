#include "mahler/parse.hpp"

#include <cctype>

namespace mahler {

namespace {

class Parser {
public:
  Parser(const std::string &s, int p) : s_(s), p_(p) {}

  RatFun run() {
    RatFun out = expr();
    skip();
    if (i_ != s_.size())
      fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_]))
      ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool accept(char c) {
    if (!peek(c))
      return false;
    ++i_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool accept_word(const std::string &w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0)
      return false;
    i_ += w.size();
    return true;
  }

  Int integer() {
    skip();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_]))
      ++i_;
    if (start == i_)
      fail("expected integer");
    return Int(s_.substr(start, i_ - start));
  }

  long small_integer() {
    size_t at = i_;
    Int v = integer();
    if (!v.fits_slong_p() || v > 1000000000) {
      i_ = at;
      fail("integer too large");
    }
    return v.get_si();
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size())
      return false;
    char c = s_[i_];
    return std::isdigit((unsigned char)c) || c == 'x' || c == '(' ||
           s_.compare(i_, 5, "zeta(") == 0 || s_.compare(i_, 5, "root(") == 0;
  }

  RatFun term() {
    RatFun acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        size_t at = i_;
        RatFun d = factor();
        if (d.is_zero()) {
          i_ = at;
          fail("division by zero");
        }
        acc = acc / d;
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    if (accept('-'))
      return -factor();
    if (accept('+'))
      return factor();
    return power();
  }

  RatFun power() {
    RatFun base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      if (!neg)
        accept('+');
      long e = small_integer();
      if (neg && base.is_zero())
        fail("division by zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFun primary() {
    skip();
    if (i_ >= s_.size())
      fail("unexpected end of input");
    char c = s_[i_];
    if (std::isdigit((unsigned char)c))
      return RatFun(AlgConst(Rat(integer())));
    if (accept_word("zeta(")) {
      size_t at = i_;
      long N = small_integer();
      if (N < 1) {
        i_ = at;
        fail("zeta order must be positive");
      }
      expect(')');
      return RatFun(AlgConst::zeta(N, 1));
    }
    if (accept_word("root(")) {
      skip();
      size_t at = i_;
      Rat r(integer());
      if (accept('/')) {
        Int den = integer();
        if (den == 0) {
          i_ = at;
          fail("zero denominator in radicand");
        }
        r /= Rat(den);
      }
      if (r <= 0) {
        i_ = at;
        fail("radicand must be positive");
      }
      expect(',');
      skip();
      size_t kat = i_;
      long k = small_integer();
      if (k < 1 || !is_power_of(k, p_))
        throw UnsupportedRadicalIndex("radical index " + std::to_string(k) +
                                          " is not a power of " + std::to_string(p_),
                                      kat);
      expect(')');
      return RatFun(AlgConst::radical(r, k));
    }
    if (c == 'x') {
      ++i_;
      return RatFun::x();
    }
    if (accept('(')) {
      RatFun e = expr();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string &s_;
  int p_;
  size_t i_ = 0;
};

} // namespace

RatFun parse_expr(const std::string &s, int p) { return Parser(s, p).run(); }

} // namespace mahler
