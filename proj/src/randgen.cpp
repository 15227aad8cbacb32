#include "trilin/randgen.hpp"

#include "trilin/triform.hpp"

namespace trilin {

Rational random_nonzero(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(1, range);
  std::bernoulli_distribution s(0.5);
  int v = d(rng);
  return Rational(s(rng) ? v : -v);
}

namespace {

MultiIndex random_monomial(std::size_t n, std::size_t vars, unsigned order, std::mt19937_64& rng) {
  MultiIndex a(n);
  std::uniform_int_distribution<std::size_t> pick(1, vars);
  for (unsigned k = 0; k < order; ++k) a.add(pick(rng), 1);
  return a;
}

}  // namespace

Jet<Rational> random_jet(std::size_t n, std::size_t vars, unsigned lo, unsigned hi, unsigned terms,
                         std::mt19937_64& rng, int range) {
  Jet<Rational> j(n);
  if (vars == 0) return j;
  std::uniform_int_distribution<unsigned> ord(lo, hi);
  for (unsigned t = 0; t < terms; ++t) j.add_term(random_monomial(n, vars, ord(rng), rng), random_nonzero(rng, range));
  return j;
}

RatMap random_unitriangular_map(std::size_t n, std::mt19937_64& rng, const RandomMapConfig& cfg) {
  RatMap m = RatMap::identity(n);
  std::uniform_int_distribution<unsigned> cnt(0, cfg.max_terms);
  for (std::size_t i = 2; i <= n; ++i) m.comps[i - 1] += random_jet(n, i - 1, 1, cfg.degree, cnt(rng), rng, cfg.coeff_range);
  return m;
}

RatMap random_triangular_map(std::size_t n, std::mt19937_64& rng, const RandomMapConfig& cfg) {
  RatMap m;
  std::uniform_int_distribution<unsigned> cnt(0, cfg.max_terms);
  for (std::size_t i = 1; i <= n; ++i) {
    Jet<Rational> c = Jet<Rational>::variable(n, i) * random_nonzero(rng, cfg.coeff_range);
    Jet<Rational> extra = random_jet(n, i, 1, cfg.degree, cnt(rng), rng, cfg.coeff_range);
    // keep the diagonal entry of the Jacobian intact
    Jet<Rational> clean(n);
    for (const auto& [a, q] : extra.terms())
      if (!(a == MultiIndex::lambda(i))) clean.add_term(a, q);
    m.comps.push_back(c + clean);
  }
  return m;
}

RatMap random_invertible_map_deg2(std::size_t n, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> ent(-range, range);
  RatMat lo(n, RatVec(n)), up(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    lo[i][i] = 1;
    up[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) lo[i][j] = ent(rng);
    for (std::size_t j = i + 1; j < n; ++j) up[i][j] = ent(rng);
  }
  RatMat l(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l[i][j] += lo[i][k] * up[k][j];
  // E: x_a -> x_a + c x_b x_e with a not in {b, e}
  std::vector<Jet<Rational>> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(Jet<Rational>::variable(n, k));
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(1, n);
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    while (b == a) b = pick(rng);
    while (c == a) c = pick(rng);
    e[a - 1] += Jet<Rational>::variable(n, b) * Jet<Rational>::variable(n, c) * random_nonzero(rng, range);
  }
  RatMap m;
  for (std::size_t i = 0; i < n; ++i) {
    Jet<Rational> s(n);
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(l[i][j]) != 0) s += e[j] * l[i][j];
    m.comps.push_back(s);
  }
  return m;
}

LowerTriangularSystem random_triangular_system(std::size_t n, std::mt19937_64& rng, unsigned degree,
                                               bool with_lambda) {
  LowerTriangularSystem sys;
  sys.names = default_var_names(n);
  std::uniform_int_distribution<unsigned> cnt(1, 3);
  std::uniform_int_distribution<unsigned> kdeg(1, degree);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t vars = std::min(i + 1, n);
    Jet<Rational> fi = random_jet(n, vars, 1, degree, cnt(rng), rng);
    if (i < n) {
      if (with_lambda) {
        MultiIndex lam = MultiIndex::lambda(i + 1, kdeg(rng)).padded(n);
        do fi.add_term(lam, random_nonzero(rng, 3));
        while (sgn(fi.coeff(lam)) == 0);
      } else {
        // some term must involve x_{i+1}
        MultiIndex a = random_monomial(n, i, kdeg(rng) - 1, rng);
        a.add(i + 1, 1);
        fi.add_term(a, random_nonzero(rng, 3));
      }
      while (!fi.depends_on(i + 1)) fi.add_term(MultiIndex::lambda(i + 1, 1).padded(n), Rational(1));
    }
    sys.f.push_back(fi);
  }
  sys.g = Jet<Rational>::constant(n, random_nonzero(rng, 3)) + random_jet(n, n, 1, 2, cnt(rng) - 1, rng);
  return sys;
}

}  // namespace trilin
