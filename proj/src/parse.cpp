#include "borelhilb/parse.hpp"
#include "borelhilb/error.hpp"

#include <cctype>
#include <limits>

namespace borel {

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  HilbertPoly parse_all() {
    HilbertPoly p = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  QNotation q_all() {
    skip();
    QNotation q = q_literal();
    skip();
    if (eat('+')) {
      q.plus_constant = integer();
    } else if (eat('-')) {
      q.plus_constant = -integer();
    }
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return q;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c))
      fail(std::string("expected '") + c + "'");
  }

  bool keyword(const char* kw) {
    skip();
    std::size_t len = std::char_traits<char>::length(kw);
    if (s_.compare(pos_, len, kw) != 0)
      return false;
    pos_ += len;
    return true;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int digit = s_[pos_] - '0';
      if (v > (std::numeric_limits<long>::max() - digit) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    return neg ? -v : v;
  }

  mpz_class big_integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(' || c == 'b' || c == 'Q';
  }

  HilbertPoly expr() {
    HilbertPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  HilbertPoly term() {
    HilbertPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        HilbertPoly d = unary();
        if (d.degree() != 0) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= mpq_class(1) / d.coeff(0);
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  HilbertPoly unary() {
    if (eat('-'))
      return -unary();
    if (eat('+'))
      return unary();
    return power();
  }

  HilbertPoly power() {
    HilbertPoly base = primary();
    if (!eat('^'))
      return base;
    skip();
    std::size_t at = pos_;
    long e = integer();
    if (e < 0 || e > 64) {
      pos_ = at;
      fail("exponent must be in 0..64");
    }
    HilbertPoly r(1);
    for (long i = 0; i < e; ++i)
      r *= base;
    return r;
  }

  HilbertPoly primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return HilbertPoly({mpq_class(big_integer())});
    if (c == '(') {
      ++pos_;
      HilbertPoly p = expr();
      expect(')');
      return p;
    }
    if (keyword("binom"))
      return binom();
    if (c == 'Q') {
      std::size_t at = pos_;
      QNotation q = q_literal();
      try {
        return q_to_poly(q);
      } catch (const ContractError& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    if (c == 't') {
      ++pos_;
      return HilbertPoly::t();
    }
    if (c == '\0')
      fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  HilbertPoly binom() {
    expect('(');
    HilbertPoly top = expr();
    expect(',');
    skip();
    std::size_t at = pos_;
    long k = integer();
    if (k < 0 || k > 64) {
      pos_ = at;
      fail("binom order must be in 0..64");
    }
    expect(')');
    // binom(top, k) = prod_{j<k} (top - j) / k!
    HilbertPoly r(1);
    mpz_class fact = 1;
    for (long j = 0; j < k; ++j) {
      r *= top - HilbertPoly(j);
      fact *= j + 1;
    }
    r *= mpq_class(1) / mpq_class(fact);
    return r;
  }

  QNotation q_literal() {
    if (!keyword("Q"))
      fail("expected 'Q'");
    expect('(');
    QNotation q;
    if (peek() != ';') {
      do {
        skip();
        long v = integer();
        if (v < 0 || v > 64)
          fail("Q index out of range");
        q.indices.push_back(static_cast<int>(v));
      } while (eat(','));
    }
    expect(';');
    if (peek() != ')') {
      do
        q.values.push_back(integer());
      while (eat(','));
    }
    expect(')');
    if (q.indices.size() != q.values.size())
      fail("Q literal needs as many values as indices");
    return q;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

HilbertPoly parse_poly(const std::string& text) { return Parser(text).parse_all(); }

QNotation parse_q(const std::string& text) { return Parser(text).q_all(); }

} // namespace borel
