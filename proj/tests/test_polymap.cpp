#include <gtest/gtest.h>

#include <random>

#include "test_config.hpp"
#include "trilin/parser.hpp"
#include "trilin/polymap.hpp"
#include "trilin/randgen.hpp"

using namespace trilin;

namespace {

const std::vector<std::string> X1{"x1"};
const std::vector<std::string> X3{"x1", "x2", "x3"};

RatMap map_of(std::initializer_list<const char*> comps, const std::vector<std::string>& v) {
  RatMap m;
  for (const char* c : comps) m.comps.push_back(parse_jet(c, v));
  return m;
}

}  // namespace

TEST(TriangularMap, RejectsBadShapes) {
  EXPECT_THROW(TriangularMap(map_of({"x1 + x2", "x2", "x3"}, X3)), std::invalid_argument);
  EXPECT_THROW(TriangularMap(map_of({"x1", "x2 + 1", "x3"}, X3)), std::invalid_argument);
  EXPECT_THROW(TriangularMap(map_of({"x1", "x1 + x2^2", "x3"}, X3)), std::invalid_argument);
  EXPECT_NO_THROW(TriangularMap(map_of({"2*x1", "x1 - x2 + x2^3", "x3 + x1*x2"}, X3)));
  EXPECT_FALSE(triangular_violations(map_of({"x2", "x1", "x3"}, X3)).empty());
}

TEST(TriangularMap, ExactInverseExample) {
  TriangularMap u(map_of({"x1", "x2 + x1^2", "x3 + x1"}, X3));
  TriangularMap v = invert_triangular(u, 6);
  EXPECT_TRUE(v.map().exact());
  EXPECT_EQ(v.map(), map_of({"x1", "x2 - x1^2", "x3 - x1"}, X3));
  TriangularMap id = invert_triangular(TriangularMap::identity(3), 4);
  EXPECT_EQ(id.map(), RatMap::identity(3));
}

TEST(TriangularMap, SeriesReversion) {
  // x = y + y^2 reverses to y = sum (-1)^k C_k x^(k+1) with Catalan C_k
  const unsigned d = 7;
  TriangularMap u(map_of({"x1 + x1^2"}, X1));
  TriangularMap v = invert_triangular(u, d);
  EXPECT_EQ(v.valid_to(), static_cast<Degree>(d));
  mpz_class c = 1;
  for (unsigned k = 0; k + 1 <= d; ++k) {
    Rational want(k % 2 ? -c : c);
    EXPECT_EQ(v.map()[0].coeff(MultiIndex{k + 1}), want) << "order " << k + 1;
    c = c * 2 * (2 * k + 1) / (k + 2);
  }
  EXPECT_EQ(invert_triangular(u, 3).map(), map_of({"x1 - x1^2 + 2*x1^3 @deg 3"}, X1));
}

TEST(TriangularMap, NonlinearDiagonal) {
  TriangularMap u(map_of({"-2*x1 + x1^3", "x2 + x1*x2 + 3*x2^2", "x3 - x1*x3^2 + x2^2"}, X3));
  const Degree d = 6;
  TriangularMap v = invert_triangular(u, d);
  RatMap id = compose_maps(u.map(), v.map(), d);
  EXPECT_EQ(truncated(id, d), truncated(RatMap::identity(3), d));
  id = compose_maps(v.map(), u.map(), d);
  EXPECT_EQ(truncated(id, d), truncated(RatMap::identity(3), d));
}

TEST(TriangularMap, RandomUnitriangularInversesAreExact) {
  std::mt19937_64 rng(cfg::kSeed + 3);
  for (int t = 0; t < 30; ++t) {
    // in three variables the inverse has degree at most 9
    RatMap m = random_unitriangular_map(3, rng);
    TriangularMap v = invert_triangular(TriangularMap(m), 10);
    EXPECT_TRUE(v.map().exact()) << map_to_string(m, X3, X3);
    EXPECT_EQ(compose_maps(m, v.map()), RatMap::identity(3));
  }
}

TEST(GeneralMap, Inverse) {
  RatMap t = map_of({"x1 - x3", "x2 + x3 - x1^2", "x1 + x3"}, X3);
  RatMap inv = invert_map(t, 6);
  EXPECT_EQ(truncated(compose_maps(t, inv, 6), 6), truncated(RatMap::identity(3), 6));
  EXPECT_THROW(invert_map(map_of({"x1 + x2", "x1 + x2", "x3"}, X3), 3), std::invalid_argument);
  EXPECT_THROW(invert_map(map_of({"x1 + 1", "x2", "x3"}, X3), 3), std::invalid_argument);
}

TEST(GeneralMap, RandomDegreeTwoMapsHavePolynomialInverses) {
  std::mt19937_64 rng(cfg::kSeed + 4);
  for (int t = 0; t < 30; ++t) {
    RatMap s = random_invertible_map_deg2(4, rng);
    RatMap inv = invert_map(s, 8);
    EXPECT_TRUE(inv.exact());
    EXPECT_EQ(compose_maps(s, inv), RatMap::identity(4));
  }
}
