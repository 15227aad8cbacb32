#include <gtest/gtest.h>

#include "trilin/jetfun.hpp"
#include "trilin/parser.hpp"

using namespace trilin;

namespace {

const std::vector<std::string> X2{"x1", "x2"};
const std::vector<std::string> X3{"x1", "x2", "x3"};

Jet<Rational> J(const std::string& s, const std::vector<std::string>& v) { return parse_jet(s, v); }
MultiIndex mi(const char* s) { return parse_multiindex(s); }

}  // namespace

TEST(Parser, ThreeTermPolynomial) {
  auto p = J("x1*x2^3 + x1^2*x2 - x1", X2);
  EXPECT_EQ(all_indices_of(p), (IndexSet{mi("(1,3)"), mi("(2,1)"), mi("(1,0)")}));
  EXPECT_EQ(p.coeff(mi("(1,0)")), Rational(-1));
  EXPECT_TRUE(p.exact());
}

TEST(Parser, ZeroAndConstants) {
  EXPECT_TRUE(J("0", X2).empty());
  EXPECT_TRUE(J("x1 - x1", X2).empty());
  EXPECT_EQ(J("5", X2).constant_term(), Rational(5));
  EXPECT_EQ(J("-3/4", X2).constant_term(), Rational(-3, 4));
}

TEST(Parser, SinJetAgainstTaylorSeries) {
  // sin t = sum (-1)^k t^(2k+1)/(2k+1)!, t = x2^3, kept to order 9
  Jet<Rational> want(2, 9);
  mpz_class fact = 1;
  for (unsigned k = 0, m = 1; 3 * m <= 9; ++k, m += 2) {
    if (m > 1) fact *= (m - 1) * m;
    Rational c(k % 2 ? -1 : 1);
    c /= Rational(fact);
    want.add_term(MultiIndex::lambda(2, 3 * m).padded(2), c);
  }
  auto got = J("x2^3 - 1/6*x2^9 @deg 9", X2);
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.valid_to(), 9);
}

TEST(Parser, Errors) {
  EXPECT_THROW(J("x1^-1", X2), ParseError);
  EXPECT_THROW(J("x1^(1/2)", X2), ParseError);
  EXPECT_THROW(J("x1^0", X2), ParseError);
  EXPECT_THROW(J("0.5*x1", X2), ParseError);
  EXPECT_THROW(J("y + 1", X2), ParseError);
  EXPECT_THROW(J("(x1 + 1", X2), ParseError);
  EXPECT_THROW(J("i*x1", X2), ParseError);
  try {
    J("x1 + * x2", X2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(Parser, ComplexUnit) {
  auto c = parse_complex_jet("x1 + i*x2", X2);
  EXPECT_EQ(c.coeff(mi("(0,1)")), Complex(0, 1));
}

TEST(Parser, RoundTripThroughPrinter) {
  for (const char* s : {"x1*x2^3 + x1^2*x2 - x1", "x2^3 - 1/6*x2^9 @deg 9", "-2/3 + x1^4*x2 - 7*x2", "0"}) {
    auto p = J(s, X2);
    EXPECT_EQ(J(p.str(X2), X2), p) << s << " printed as " << p.str(X2);
  }
}

TEST(Jet, ProductValidity) {
  auto a = J("x1 + x1^2 @deg 3", X2);
  auto b = J("x2^2", X2);
  auto c = a * b;
  EXPECT_EQ(c.valid_to(), 5);  // 3 + val(b)
  auto d = a * J("x2 + x2^5 @deg 6", X2);
  EXPECT_EQ(d.valid_to(), 4);  // min(3 + 1, 6 + 1)
  EXPECT_EQ(d.coeff(mi("(1,1)")), Rational(1));
  EXPECT_EQ(d.coeff(mi("(1,5)")), Rational(0));
}

TEST(Jet, Derivative) {
  auto p = J("x1*x2^3 + x1^2*x2 @deg 7", X2);
  auto d = p.derivative(2);
  EXPECT_EQ(d, J("3*x1*x2^2 + x1^2 @deg 6", X2));
}

TEST(Jet, CompositionExamples) {
  auto p1 = J("x1*x2^2 - x1^3", X2);
  auto q = compose(p1, {J("x1", X2), J("x1 + x2", X2)});
  EXPECT_EQ(q, J("x1*x2^2 + 2*x1^2*x2", X2));
  auto m = J("x1*x2^2*x3", X3);
  auto r = compose(m, {J("x1", X3), J("x2 - x1^2", X3), J("x3 - x1", X3)});
  EXPECT_EQ(r, J("x1*x2^2*x3 - x1^2*x2^2 - 2*x1^3*x2*x3 + 2*x1^4*x2 + x1^5*x3 - x1^6", X3));
}

TEST(Jet, CompositionTruncates) {
  auto p = J("x1^3 + x1", X2);
  auto q = compose(p, {J("x1 + x2^2 @deg 2", X2), J("x2", X2)});
  // the substitution is only known to order 2; since it has no constant
  // term, x1^3 contributes nothing below order 3
  EXPECT_EQ(q.valid_to(), 2);
  EXPECT_EQ(q, J("x1 + x2^2 @deg 2", X2));
}

TEST(Jet, Evaluate) {
  auto p = J("x1*x2^2 - 1/2*x1", X2);
  EXPECT_EQ(p.evaluate({Rational(2), Rational(3)}), Rational(17));
}
