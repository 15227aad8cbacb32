#include "trilin/parser.hpp"

#include <cctype>

namespace trilin {

std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace {

template <class S>
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, bool complex_ok)
      : t_(text), vars_(vars), complex_ok_(complex_ok) {}

  Jet<S> run() {
    std::string_view body = t_;
    Degree trunc = kExact;
    std::size_t at = t_.find('@');
    if (at != std::string_view::npos) {
      body = t_.substr(0, at);
      trunc = parse_directive(at);
    }
    end_ = body.size();
    skip();
    if (pos_ >= end_) fail("empty expression");
    Jet<S> r = expr();
    skip();
    if (pos_ < end_) fail(std::string("unexpected '") + t_[pos_] + "'");
    if (trunc != kExact) r.truncate(trunc);
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < end_ && t_[pos_] == c;
  }

  Degree parse_directive(std::size_t at) {
    std::size_t saved_end = end_;
    end_ = t_.size();
    pos_ = at + 1;
    if (t_.substr(pos_, 3) != "deg") fail("expected '@deg'");
    pos_ += 3;
    skip();
    if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected degree after '@deg'");
    mpz_class d = integer();
    skip();
    if (pos_ < end_) fail("trailing characters after '@deg'");
    if (d > 10000) fail("truncation degree too large");
    pos_ = 0;
    end_ = saved_end;
    return d.get_si();
  }

  mpz_class integer() {
    std::size_t s = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    return mpz_class(std::string(t_.substr(s, pos_ - s)));
  }

  std::size_t n() const { return vars_.size(); }

  Jet<S> expr() {
    Jet<S> r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  Jet<S> term() {
    Jet<S> r = unary();
    while (peek('*')) {
      ++pos_;
      r = r * unary();
    }
    return r;
  }

  Jet<S> unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Jet<S> power() {
    Jet<S> base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    if (pos_ < end_ && t_[pos_] == '-') fail("negative exponent not allowed");
    if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected positive integer exponent");
    mpz_class e = integer();
    if (pos_ < end_ && (t_[pos_] == '/' || t_[pos_] == '.')) fail("fractional exponent not allowed");
    if (e <= 0) fail("exponent must be a positive integer");
    if (e > 1000) fail("exponent too large");
    unsigned k = static_cast<unsigned>(e.get_ui());
    Jet<S> r = Jet<S>::constant(n(), ScalarTraits<S>::from_int(1));
    for (unsigned j = 0; j < k; ++j) r = r * base;
    return r;
  }

  Jet<S> primary() {
    skip();
    if (pos_ >= end_) fail("unexpected end of expression");
    char c = t_[pos_];
    if (c == '(') {
      ++pos_;
      Jet<S> r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (pos_ < end_ && t_[pos_] == '.') fail("decimal literals are not supported; use a/b");
      if (pos_ < end_ && t_[pos_] == '/') {
        ++pos_;
        if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>(t_[pos_]))) fail("expected denominator");
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Jet<S>::constant(n(), ScalarTraits<S>::from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t s = pos_;
      while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_')) ++pos_;
      std::string name(t_.substr(s, pos_ - s));
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return Jet<S>::variable(n(), k + 1);
      if (name == "i" && complex_ok_) return imaginary_unit();
      pos_ = s;
      if (name == "i") fail("complex literal 'i' not allowed here");
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Jet<S> imaginary_unit();

  std::string_view t_;
  const std::vector<std::string>& vars_;
  bool complex_ok_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

template <>
Jet<Rational> Parser<Rational>::imaginary_unit() {
  fail("complex literal 'i' not allowed here");
}

template <>
Jet<Complex> Parser<Complex>::imaginary_unit() {
  return Jet<Complex>::constant(n(), Complex(0.0, 1.0));
}

}  // namespace

Jet<Rational> parse_jet(std::string_view text, const std::vector<std::string>& vars) {
  return Parser<Rational>(text, vars, false).run();
}

Jet<Complex> parse_complex_jet(std::string_view text, const std::vector<std::string>& vars) {
  return Parser<Complex>(text, vars, true).run();
}

}  // namespace trilin
