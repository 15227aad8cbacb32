#include "trilin/polymap.hpp"

#include <stdexcept>

namespace trilin {

std::vector<std::string> triangular_violations(const RatMap& m) {
  std::vector<std::string> v;
  std::size_t n = m.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& c = m[i - 1];
    if (c.num_vars() > n) v.push_back("component " + std::to_string(i) + " has too many variables");
    for (std::size_t k = i + 1; k <= c.num_vars(); ++k)
      if (c.depends_on(k))
        v.push_back("component " + std::to_string(i) + " depends on variable " + std::to_string(k));
    if (c.valid_to() < 1) {
      v.push_back("component " + std::to_string(i) + " is not known to first order");
      continue;
    }
    if (sgn(c.constant_term()) != 0) v.push_back("component " + std::to_string(i) + " does not vanish at 0");
    MultiIndex e = MultiIndex::lambda(i);
    if (sgn(c.coeff(e)) == 0) v.push_back("Jacobian diagonal entry " + std::to_string(i) + " vanishes at 0");
  }
  return v;
}

TriangularMap::TriangularMap(RatMap m) : m_(std::move(m)) {
  auto v = triangular_violations(m_);
  if (!v.empty()) throw std::invalid_argument("not a triangular coordinate change: " + v.front());
  for (auto& c : m_.comps)
    if (c.num_vars() != m_.size()) c = c.with_num_vars(m_.size());
}

RatMat linear_part(const RatMap& m) {
  std::size_t n = m.size();
  RatMat a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= n; ++j) a[i][j - 1] = m[i].coeff(MultiIndex::lambda(j));
  return a;
}

namespace {

bool is_identity(const RatMap& m) {
  RatMap id = RatMap::identity(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k].terms() != id[k].terms()) return false;
  return true;
}

void self_check(const RatMap& m, const RatMap& inv, Degree d) {
  RatMap back = compose_maps(m, inv, d);
  for (std::size_t k = 0; k < back.size(); ++k) {
    Jet<Rational> want = Jet<Rational>::variable(m.size(), k + 1);
    if (!equal_up_to(back[k], want, d))
      throw std::logic_error("internal error: map composed with its inverse is not the identity mod degree " +
                             std::to_string(d + 1));
  }
}

// Mark the inverse exact if it recomposes exactly to the identity. A
// truncated inverse that reaches degree d is almost never exact, so that
// case is not attempted.
void promote(const RatMap& m, RatMap& inv, Degree d) {
  if (!m.exact()) return;
  for (const auto& c : inv.comps)
    if (c.degree() >= d) return;
  RatMap ex;
  for (const auto& c : inv.comps) {
    Jet<Rational> e(c.num_vars());
    for (const auto& [a, q] : c.terms()) e.add_term(a, q);
    ex.comps.push_back(e);
  }
  if (is_identity(compose_maps(m, ex))) inv = ex;
}

}  // namespace

TriangularMap invert_triangular(const TriangularMap& tm, Degree d) {
  const RatMap& m = tm.map();
  std::size_t n = m.size();
  Degree dd = std::min(d, m.valid_to());
  if (dd < 1) throw std::invalid_argument("inverse needs truncation degree >= 1");
  RatMap inv;
  for (std::size_t i = 1; i <= n; ++i) {
    const Jet<Rational>& mi = m[i - 1];
    Rational diag = mi.coeff(MultiIndex::lambda(i));
    Jet<Rational> rest = mi;
    rest -= Jet<Rational>::variable(n, i) * diag;
    // substitution: earlier layers, then the unknown component itself
    std::vector<Jet<Rational>> subs = inv.comps;
    Jet<Rational> xi = Jet<Rational>::variable(n, i);
    Rational dinv = 1 / diag;
    Jet<Rational> u = (xi * dinv).truncated(dd);
    for (Degree it = 0; it <= dd + 1; ++it) {
      subs.resize(i - 1);
      subs.push_back(u);
      for (std::size_t k = i + 1; k <= n; ++k) subs.push_back(Jet<Rational>(n));
      Jet<Rational> next = ((xi - compose(rest, subs, dd)) * dinv).truncated(dd);
      if (next.terms() == u.terms()) break;
      u = next;
    }
    inv.comps.push_back(u);
  }
  self_check(m, inv, dd);
  promote(m, inv, dd);
  return TriangularMap(inv);
}

RatMap invert_map(const RatMap& m, Degree d) {
  std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k].valid_to() < 1) throw std::invalid_argument("map component not known to first order");
    if (sgn(m[k].constant_term()) != 0) throw std::invalid_argument("map does not fix the origin");
  }
  auto linv = inverse(linear_part(m));
  if (!linv) throw std::invalid_argument("singular Jacobian at 0");
  Degree dd = std::min(d, m.valid_to());
  RatMap nonlin = m;
  RatMat lin = linear_part(m);
  for (std::size_t k = 0; k < n; ++k) {
    nonlin.comps[k] = m[k];
    for (std::size_t j = 1; j <= n; ++j)
      if (sgn(lin[k][j - 1]) != 0) nonlin.comps[k] -= Jet<Rational>::variable(n, j) * lin[k][j - 1];
  }
  auto apply_linv = [&](const std::vector<Jet<Rational>>& v) {
    std::vector<Jet<Rational>> r;
    for (std::size_t i = 0; i < n; ++i) {
      Jet<Rational> s(n, dd);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn((*linv)[i][j]) != 0) s += v[j] * (*linv)[i][j];
      r.push_back(s);
    }
    return r;
  };
  std::vector<Jet<Rational>> x;
  for (std::size_t k = 1; k <= n; ++k) x.push_back(Jet<Rational>::variable(n, k));
  std::vector<Jet<Rational>> a = apply_linv(x);
  for (Degree it = 0; it <= dd + 1; ++it) {
    std::vector<Jet<Rational>> rhs;
    for (std::size_t k = 0; k < n; ++k) rhs.push_back(x[k] - compose(nonlin[k], a, dd));
    auto next = apply_linv(rhs);
    bool same = true;
    for (std::size_t k = 0; k < n; ++k) same = same && next[k].terms() == a[k].terms();
    a = next;
    if (same) break;
  }
  RatMap inv(a);
  self_check(m, inv, dd);
  promote(m, inv, dd);
  return inv;
}

Jet<Rational> compose_triangular(const Jet<Rational>& p, const TriangularMap& v) {
  if (p.num_vars() != v.size())
    throw std::invalid_argument("composition dimension mismatch: jet has " + std::to_string(p.num_vars()) +
                                " variables, map has " + std::to_string(v.size()) + " components");
  return compose(p, v.map().comps);
}

std::string map_to_string(const RatMap& m, const std::vector<std::string>& out_names,
                          const std::vector<std::string>& in_names) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    s += (k < out_names.size() ? out_names[k] : "y" + std::to_string(k + 1)) + " = " + m[k].str(in_names) + "\n";
  }
  return s;
}

}  // namespace trilin
