#include "trilin/eliminate.hpp"

#include <Eigen/Eigenvalues>
#include <random>

#include "trilin/jetfun.hpp"

namespace trilin {

namespace {

struct Unknown {
  std::size_t comp;
  MultiIndex beta;
};

void enumerate_le(const MultiIndex& alpha, std::size_t upto, std::size_t pos, MultiIndex& cur,
                  std::vector<MultiIndex>& out) {
  if (pos > upto) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= alpha[pos]; ++v) {
    cur.set(pos, v);
    enumerate_le(alpha, upto, pos + 1, cur, out);
  }
  cur.set(pos, 0);
}

std::vector<Unknown> unknowns_for(const MultiIndex& alpha, std::size_t m) {
  std::vector<Unknown> u;
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<MultiIndex> betas;
    MultiIndex cur(m);
    enumerate_le(alpha, i, 1, cur, betas);
    for (const auto& b : betas) {
      if (b.is_zero() || b == MultiIndex::lambda(i)) continue;
      u.push_back({i, b});
    }
  }
  return u;
}

struct Assignment {
  std::vector<std::pair<Unknown, Rational>> fixed;
  std::optional<Unknown> symbolic;
};

// substitution x_i = y_i + sum c y^beta (+ t y^beta), in m+1 variables with t last
std::vector<Jet<Rational>> substitution(std::size_t m, const Assignment& as) {
  std::size_t n1 = m + 1;
  std::vector<Jet<Rational>> subs;
  for (std::size_t i = 1; i <= m; ++i) subs.push_back(Jet<Rational>::variable(n1, i));
  for (const auto& [u, c] : as.fixed) subs[u.comp - 1].add_term(u.beta.padded(n1), c);
  if (as.symbolic) {
    MultiIndex b = as.symbolic->beta.padded(n1);
    b.set(n1, 1);
    subs[as.symbolic->comp - 1].add_term(b, Rational(1));
  }
  return subs;
}

// coefficients in t of y^alpha
std::vector<Rational> target_poly(const Jet<Rational>& p_low, const MultiIndex& alpha, const Assignment& as) {
  std::size_t m = p_low.num_vars();
  auto subs = substitution(m, as);
  Jet<Rational> q = compose(p_low, subs, 2 * static_cast<Degree>(alpha.order()) + 2);
  std::vector<Rational> coef;
  for (const auto& [a, c] : q.terms()) {
    bool match = true;
    for (std::size_t k = 1; k <= m && match; ++k) match = a[k] == alpha[k];
    if (!match) continue;
    unsigned e = a[m + 1];
    if (coef.size() <= e) coef.resize(e + 1);
    coef[e] = c;
  }
  while (!coef.empty() && sgn(coef.back()) == 0) coef.pop_back();
  return coef;
}

Rational eval_poly(const std::vector<Rational>& a, const Rational& t) {
  Rational s = 0;
  for (std::size_t k = a.size(); k-- > 0;) s = s * t + a[k];
  return s;
}

std::optional<Rational> rational_root_near(const std::vector<Rational>& a, double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e9) return std::nullopt;
  // continued fraction convergents of x
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double r = x;
  for (int it = 0; it < 30; ++it) {
    double fl = std::floor(r);
    long long ai = static_cast<long long>(fl);
    long long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    if (k2 > 100000) break;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    Rational q(static_cast<long>(h0), static_cast<long>(k0));
    q.canonicalize();
    if (sgn(eval_poly(a, q)) == 0) return q;
    double frac = r - fl;
    if (frac < 1e-14) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

PolyMap<Complex> complex_map(std::size_t m, const std::vector<std::pair<Unknown, Complex>>& vals) {
  PolyMap<Complex> v;
  for (std::size_t i = 1; i <= m; ++i) v.comps.push_back(Jet<Complex>::variable(m, i));
  for (const auto& [u, c] : vals) v.comps[u.comp - 1].add_term(u.beta.padded(m), c);
  return v;
}

RatMap rational_map(std::size_t m, const std::vector<std::pair<Unknown, Rational>>& vals) {
  RatMap v = RatMap::identity(m);
  for (const auto& [u, c] : vals) v.comps[u.comp - 1].add_term(u.beta.padded(m), c);
  return v;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Rational>& a_in) {
  std::vector<Rational> a = a_in;
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  if (a.size() < 2) return {};
  std::size_t d = a.size() - 1;
  std::vector<Complex> ac;
  for (const auto& q : a) ac.emplace_back(q.get_d(), 0.0);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) comp(i, d - 1) = -ac[i] / ac[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    Complex z = es.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      Complex f = 0, df = 0;
      for (std::size_t k = d + 1; k-- > 0;) {
        df = df * z + f;
        f = f * z + ac[k];
      }
      if (std::abs(df) == 0.0) break;
      Complex step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

EliminationResult eliminate_index(const Jet<Rational>& p, const MultiIndex& alpha, std::uint64_t seed) {
  std::size_t m = p.num_vars();
  if (alpha.proper_index() > m)
    throw EliminationError("index " + alpha.str() + " uses more variables than p has");
  if (static_cast<Degree>(alpha.order()) > p.valid_to())
    throw EliminationError("index " + alpha.str() + " exceeds the truncation degree of p");
  if (sgn(p.coeff(alpha)) == 0) throw EliminationError("not a multi-index of p: " + alpha.str());
  if (is_essential_index(p, alpha)) throw EliminationError("index is essential: " + alpha.str());

  Degree top = alpha.order();
  Jet<Rational> p_low(m);
  for (const auto& [a, c] : p.terms())
    if (static_cast<Degree>(a.order()) <= top) p_low.add_term(a, c);

  auto uks = unknowns_for(alpha, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);

  Assignment chosen;
  std::vector<Rational> poly;
  std::string method;
  for (const auto& u : uks) {
    Assignment as;
    as.symbolic = u;
    poly = target_poly(p_low, alpha, as);
    if (poly.size() >= 2) {
      chosen = as;
      method = "single unknown";
      break;
    }
  }
  if (method.empty()) {
    for (int trial = 0; trial < 64 && method.empty(); ++trial) {
      for (std::size_t s = 0; s < uks.size(); ++s) {
        Assignment as;
        as.symbolic = uks[s];
        for (std::size_t k = 0; k < uks.size(); ++k) {
          if (k == s) continue;
          int v = small(rng);
          if (v != 0) as.fixed.push_back({uks[k], Rational(v)});
        }
        poly = target_poly(p_low, alpha, as);
        if (poly.size() >= 2) {
          chosen = as;
          method = "sequential";
          break;
        }
      }
    }
  }
  if (method.empty()) throw EliminationError("solver failed: no coefficient choice affects the target term");

  EliminationResult res;
  res.method = method;
  res.roots = polynomial_roots(poly);
  if (res.roots.empty()) throw EliminationError("solver failed: no roots found");

  std::optional<Rational> exact_root;
  for (const auto& z : res.roots) {
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z))) continue;
    if ((exact_root = rational_root_near(poly, z.real()))) break;
  }
  Complex root;
  if (exact_root) {
    root = Complex(exact_root->get_d(), 0.0);
  } else {
    root = res.roots.front();
    for (const auto& z : res.roots) {
      if (std::abs(z.imag()) <= 1e-10 * std::max(1.0, std::abs(z))) {
        root = Complex(z.real(), 0.0);
        break;
      }
    }
  }

  std::vector<std::pair<Unknown, Complex>> cvals;
  for (const auto& [u, c] : chosen.fixed) cvals.push_back({u, Complex(c.get_d(), 0.0)});
  cvals.push_back({*chosen.symbolic, root});
  res.map = complex_map(m, cvals);
  res.real = true;
  for (const auto& [u, c] : cvals) res.real = res.real && c.imag() == 0.0;

  Jet<Complex> q = compose(p_low.cast<Complex>(), res.map.comps, top);
  res.target_coeff = q.coeff(alpha);
  for (const auto& t : q.terms()) res.max_coeff = std::max(res.max_coeff, std::abs(t.second));

  if (exact_root) {
    auto rvals = chosen.fixed;
    rvals.push_back({*chosen.symbolic, *exact_root});
    RatMap em = rational_map(m, rvals);
    Jet<Rational> qe = compose(p_low, em.comps, top);
    if (sgn(qe.coeff(alpha)) != 0) throw std::logic_error("internal error: exact root does not eliminate index");
    res.exact_map = em;
    res.target_coeff = 0;
  }
  if (!(std::abs(res.target_coeff) < 1e-9 * res.max_coeff))
    throw EliminationError("solver failed: residual " + format_double(std::abs(res.target_coeff)) +
                           " relative to " + format_double(res.max_coeff));
  return res;
}

}  // namespace trilin
