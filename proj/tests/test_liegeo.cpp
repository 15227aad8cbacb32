#include <gtest/gtest.h>

#include <random>

#include "test_config.hpp"
#include "trilin/liegeo.hpp"
#include "trilin/parser.hpp"
#include "trilin/randgen.hpp"
#include "trilin/sysfile.hpp"

using namespace trilin;

namespace {

SystemFile load(const char* name) { return load_system_file(std::string(TRILIN_DATA_DIR) + "/" + name); }

VectorField field(std::initializer_list<const char*> comps, const std::vector<std::string>& names) {
  std::vector<Jet<Rational>> c;
  for (const char* s : comps) c.push_back(parse_jet(s, names));
  return VectorField(c);
}

MultiIndex mi(const char* s) { return parse_multiindex(s); }

RatVec vec(std::initializer_list<long> v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

BracketContext nse1_context() {
  auto sf = load("nse1.sys");
  return {sf.affine().f, sf.family('G'), sf.family('Y')};
}

}  // namespace

TEST(Bracket, FirstNse1Bracket) {
  auto sf = load("nse1.sys");
  auto g = sf.family('G');
  auto b = lie_bracket(g[3], sf.affine().f);
  const char* w = "xi2 - xi3^2 + xi4";
  std::string w2 = std::string("2*xi3*(") + w + ")";
  EXPECT_EQ(b, field({w, w2.c_str(), w, "0"}, sf.vars));
}

TEST(Bracket, CounterexampleBracket) {
  auto sf = load("counterexample3.sys");
  auto y = sf.family('Y');
  auto v = ad_multi({y[0], y[1]}, mi("(1,1)"), sf.affine().f);
  EXPECT_EQ(v, field({"3*x1^2*(x3 + 1) - 1", "0", "x1^3"}, sf.vars));
  EXPECT_FALSE(membership_at_origin(v, {y[1], y[2]}));
}

TEST(Bracket, AntisymmetryAndJacobi) {
  std::mt19937_64 rng(cfg::kSeed + 21);
  for (int t = 0; t < 20; ++t) {
    Fields f;
    for (int k = 0; k < 3; ++k) {
      std::vector<Jet<Rational>> c;
      for (int i = 0; i < 3; ++i) c.push_back(random_jet(3, 3, 0, 2, 3, rng));
      f.emplace_back(c);
    }
    EXPECT_EQ(lie_bracket(f[0], f[1]) + lie_bracket(f[1], f[0]), VectorField::zero(3));
    auto j = lie_bracket(f[0], lie_bracket(f[1], f[2])) + lie_bracket(f[1], lie_bracket(f[2], f[0])) +
             lie_bracket(f[2], lie_bracket(f[0], f[1]));
    EXPECT_TRUE(j.is_zero());
  }
}

TEST(Distribution, RankAndMembership) {
  std::vector<std::string> x{"x1", "x2", "x3"};
  Fields d{field({"1", "0", "x2"}, x), field({"0", "1", "0"}, x)};
  EXPECT_EQ(rank_at_origin(d), 2u);
  EXPECT_EQ(generic_rank(d), 2u);
  EXPECT_FALSE(involutive(d));
  EXPECT_TRUE(involutive({field({"1", "0", "0"}, x), field({"0", "1", "0"}, x)}));
  EXPECT_TRUE(generic_membership(field({"x1", "x1", "x1*x2"}, x), d));
  EXPECT_FALSE(generic_membership(field({"0", "0", "1"}, x), d));
  // x2 d1 is in span{d1} generically but vanishes at 0
  Fields s{field({"x2", "0", "0"}, x)};
  EXPECT_EQ(generic_rank(s), 1u);
  EXPECT_EQ(rank_at_origin(s), 0u);
}

TEST(Triangularizable, Nse1) {
  auto sf = load("nse1.sys");
  auto r = check_triangularizable(sf.affine(), sf.family('G'));
  EXPECT_EQ(r.verdict, Verdict::pass);
  // the reduced chain recovers the hand-picked witnesses, G4 up to sign
  auto nw = normalized_witnesses(sf.affine());
  auto g = sf.family('G');
  for (int i = 0; i < 3; ++i) EXPECT_EQ(nw[i], g[i]);
  EXPECT_EQ(Rational(-1) * nw[3], g[3]);
}

TEST(Triangularizable, CanonicalChainOnTriangularSystem) {
  auto sf = load("nse1x.sys");
  auto sys = sf.affine();
  auto r = check_triangularizable(sys, canonical_witnesses(sys));
  EXPECT_NE(r.verdict, Verdict::fail);
  EXPECT_EQ(check_triangularizable(sys, normalized_witnesses(sys)).verdict, Verdict::pass);
}

TEST(Triangularizable, NonInvolutive) {
  auto sf = load("noninvolutive3.sys");
  auto r = check_triangularizable(sf.affine(), sf.family('G'));
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.failing_level, 2u);
}

TEST(YFields, VerifyAndReject) {
  auto sf = load("nse1.sys");
  EXPECT_TRUE(verify_y_fields(sf.family('G'), sf.family('Y')).ok);
  auto ce = load("counterexample3.sys");
  auto chk = verify_y_fields(ce.family('G'), ce.family('Y'));
  ASSERT_FALSE(chk.ok);
  EXPECT_NE(chk.failures.front().find("[X^3,Y^1]"), std::string::npos);
}

TEST(YFields, Solve) {
  auto sf = load("nse1.sys");
  auto s = solve_y_fields(sf.family('G'), 2);
  ASSERT_TRUE(s.sat);
  EXPECT_TRUE(verify_y_fields(sf.family('G'), s.y).ok);
  // [X^2, X^1] = -d1 leaves no room for any Y^1
  std::vector<std::string> x{"x1", "x2"};
  auto u = solve_y_fields({field({"1", "0"}, x), field({"x1", "1"}, x)}, 2);
  EXPECT_FALSE(u.sat);
}

TEST(BracketType, Nse1Confirmed) {
  auto ctx = nse1_context();
  auto l = bracket_l_type(ctx, {mi("(0,3)"), mi("(0,0,1)"), mi("(0,1,0,1)")}, 9);
  for (const auto& v : l) EXPECT_EQ(v.status, SlotStatus::confirmed) << v.note;
  auto e = bracket_e_type(ctx, {parse_index_set("{(0,3),(1,1)}"), parse_index_set("{(0,0,1)}"),
                                parse_index_set("{(0,1,0,1)}")},
                          std::nullopt);
  for (const auto& v : e) EXPECT_NE(v.status, SlotStatus::refuted) << v.note;
  // the essential probe of slot 1
  bool seen = false;
  for (const auto& p : e[0].probes)
    if (p.index == mi("(0,3)")) {
      seen = true;
      EXPECT_EQ(p.value, vec({6, 6, 0, -6}));
      EXPECT_FALSE(p.member);
    }
  EXPECT_TRUE(seen);
}

TEST(BracketType, WrongCandidatesRefuted) {
  auto ctx = nse1_context();
  auto l = bracket_l_type(ctx, {mi("(0,2)"), mi("(0,0,1)"), mi("(0,1,0,1)")}, 9);
  EXPECT_EQ(l[0].status, SlotStatus::refuted);
  auto e = bracket_e_slot(ctx, 1, parse_index_set("{(0,3)}"), 9);
  EXPECT_EQ(e.status, SlotStatus::refuted);
}

TEST(BracketType, Discover) {
  auto ctx = nse1_context();
  auto d = discover_e_slot(ctx, 1, 6);
  EXPECT_EQ(d.e, parse_index_set("{(0,3),(1,1)}"));
  EXPECT_EQ(d.least, mi("(0,3)"));
  EXPECT_TRUE(d.complete);
}

TEST(Pushforward, BracketHomomorphism) {
  std::mt19937_64 rng(cfg::kSeed + 22);
  for (int t = 0; t < 20; ++t) {
    RatMap m = random_invertible_map_deg2(3, rng);
    RatMap inv = invert_map(m, 8);
    ASSERT_TRUE(inv.exact());
    std::vector<Jet<Rational>> a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(random_jet(3, 3, 0, 2, 3, rng));
      b.push_back(random_jet(3, 3, 0, 2, 3, rng));
    }
    VectorField x(a), y(b);
    auto lhs = pushforward(m, inv, lie_bracket(x, y), 0);
    auto rhs = lie_bracket(pushforward(m, inv, x, 0), pushforward(m, inv, y, 0));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Pushforward, PointValues) {
  // (T_* X)(T(p)) = DT(p) X(p); DT by central differences, exact for quadratic T
  std::mt19937_64 rng(cfg::kSeed + 23);
  for (int t = 0; t < 20; ++t) {
    RatMap m = random_invertible_map_deg2(3, rng);
    RatMap inv = invert_map(m, 8);
    std::vector<Jet<Rational>> a;
    for (int i = 0; i < 3; ++i) a.push_back(random_jet(3, 3, 0, 3, 3, rng));
    VectorField x(a);
    auto push = pushforward(m, inv, x, 0);
    RatVec p{Rational(t % 5 - 2), Rational(1, 3), Rational(-t, 7)};
    for (auto& q : p) q.canonicalize();
    RatVec tp;
    for (const auto& c : m.comps) tp.push_back(c.evaluate(p));
    RatVec xp = x.at(p);
    RatVec want(3);
    for (int j = 0; j < 3; ++j) {
      RatVec hi = p, lo = p;
      hi[j] += 1;
      lo[j] -= 1;
      for (int i = 0; i < 3; ++i) want[i] += (m.comps[i].evaluate(hi) - m.comps[i].evaluate(lo)) / 2 * xp[j];
    }
    EXPECT_EQ(push.at(tp), want);
  }
}
