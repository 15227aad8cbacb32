#include <gtest/gtest.h>

#include <random>

#include "test_config.hpp"
#include "trilin/parser.hpp"
#include "trilin/polymatrix.hpp"
#include "trilin/randgen.hpp"

using namespace trilin;

namespace {

const std::vector<std::string> X2{"x1", "x2"};

Poly P(const char* s) { return parse_jet(s, X2); }

PolyMat mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  PolyMat m;
  for (auto r : rows) {
    std::vector<Poly> row;
    for (const char* s : r) row.push_back(P(s));
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST(PolyMatrix, ExactDivide) {
  EXPECT_EQ(exact_divide(P("x1^2 - x2^2"), P("x1 - x2")), P("x1 + x2"));
  EXPECT_EQ(exact_divide(P("2*x1*x2 + 2*x2"), P("2*x2")), P("x1 + 1"));
  EXPECT_EQ(exact_divide(P("0"), P("x1")), P("0"));
  EXPECT_THROW(exact_divide(P("x1^2 + 1"), P("x1 - 1")), std::domain_error);
  EXPECT_THROW(exact_divide(P("x1"), P("0")), std::domain_error);
}

TEST(PolyMatrix, RankAndDeterminant) {
  auto m = mat({{"1", "x1"}, {"x2", "x1*x2"}});
  EXPECT_EQ(generic_rank(m), 1u);
  EXPECT_EQ(determinant(m), P("0"));
  auto k = mat({{"1 + x1", "x2"}, {"x1", "1"}});
  EXPECT_EQ(generic_rank(k), 2u);
  EXPECT_EQ(determinant(k), P("1 + x1 - x1*x2"));
  EXPECT_EQ(generic_rank(mat({{"0", "0"}, {"0", "0"}})), 0u);
}

TEST(PolyMatrix, AdjugateIdentity) {
  std::mt19937_64 rng(cfg::kSeed + 31);
  for (int t = 0; t < 20; ++t) {
    PolyMat m(3, std::vector<Poly>(3));
    for (auto& row : m)
      for (auto& e : row) e = random_jet(3, 3, 0, 2, 2, rng);
    auto adj = adjugate(m);
    auto det = determinant(m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Poly s(3);
        for (std::size_t k = 0; k < 3; ++k) s += adj[i][k] * m[k][j];
        EXPECT_EQ(s, i == j ? det : Poly(3));
      }
  }
}

TEST(PolyMatrix, Evaluate) {
  auto m = mat({{"1 + x1", "x2^2"}});
  auto v = evaluate(m, {Rational(2), Rational(-3)});
  EXPECT_EQ(v, (RatMat{{Rational(3), Rational(9)}}));
}
