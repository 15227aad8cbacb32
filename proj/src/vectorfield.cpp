#include "trilin/vectorfield.hpp"

#include <stdexcept>

namespace trilin {

VectorField::VectorField(std::vector<Jet<Rational>> comps) : c(std::move(comps)) {
  std::size_t n = c.size();
  for (auto& j : c) {
    if (j.num_vars() > n) throw std::invalid_argument("vector field component has more variables than components");
    if (j.num_vars() < n) j = j.with_num_vars(n);
  }
}

VectorField VectorField::zero(std::size_t n) { return VectorField(std::vector<Jet<Rational>>(n, Jet<Rational>(n))); }

VectorField VectorField::coordinate(std::size_t n, std::size_t k) {
  VectorField v = zero(n);
  v.c[k - 1] = Jet<Rational>::constant(n, Rational(1));
  return v;
}

VectorField VectorField::constant(const RatVec& vals) {
  VectorField v = zero(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v.c[i] = Jet<Rational>::constant(vals.size(), vals[i]);
  return v;
}

Degree VectorField::valid_to() const {
  Degree d = kExact;
  for (const auto& j : c) d = std::min(d, j.valid_to());
  return d;
}

bool VectorField::is_zero() const {
  for (const auto& j : c)
    if (!j.empty()) return false;
  return true;
}

std::size_t VectorField::term_count() const {
  std::size_t s = 0;
  for (const auto& j : c) s += j.size();
  return s;
}

RatVec VectorField::at_origin() const {
  if (valid_to() < 0) throw std::domain_error("value at origin not determined: valid_to < 0");
  RatVec v;
  for (const auto& j : c) v.push_back(j.constant_term());
  return v;
}

RatVec VectorField::at(const RatVec& point) const {
  RatVec v;
  for (const auto& j : c) v.push_back(j.evaluate(point));
  return v;
}

Jet<Rational> VectorField::apply(const Jet<Rational>& h) const {
  Jet<Rational> r(n());
  for (std::size_t j = 1; j <= n(); ++j) {
    if (!h.depends_on(j) || c[j - 1].empty()) continue;
    r += c[j - 1] * h.derivative(j);
  }
  Degree v = std::min(valid_to() == kExact ? kExact : valid_to(), h.valid_to() == kExact ? kExact : h.valid_to() - 1);
  if (v != kExact) r.truncate(v);
  return r;
}

VectorField VectorField::truncated(Degree d) const {
  VectorField r = *this;
  for (auto& j : r.c) j.truncate(d);
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.n() != n()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < n(); ++i) c[i] += o.c[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.n() != n()) throw std::invalid_argument("vector field dimension mismatch");
  for (std::size_t i = 0; i < n(); ++i) c[i] -= o.c[i];
  return *this;
}

VectorField operator*(const Jet<Rational>& h, const VectorField& x) {
  VectorField r = x;
  for (auto& j : r.c) j = h * j;
  return r;
}

VectorField operator*(const Rational& s, const VectorField& x) {
  VectorField r = x;
  for (auto& j : r.c) j *= s;
  return r;
}

std::string VectorField::str(const std::vector<std::string>& names) const {
  std::string s = "[";
  for (std::size_t i = 0; i < n(); ++i) {
    if (i) s += " ; ";
    s += c[i].str(names);
  }
  return s + "]";
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.n() != y.n()) throw std::invalid_argument("lie bracket dimension mismatch");
  std::size_t n = x.n();
  VectorField r = VectorField::zero(n);
  for (std::size_t i = 0; i < n; ++i) r.c[i] = x.apply(y.c[i]) - y.apply(x.c[i]);
  Degree v = std::min(x.valid_to(), y.valid_to());
  if (v != kExact) r = r.truncated(v - 1);
  return r;
}

VectorField ad_multi(const std::vector<VectorField>& y, const MultiIndex& a, const VectorField& x) {
  if (a.proper_index() > y.size())
    throw std::invalid_argument("ad_multi: index " + a.str() + " needs more fields than given");
  VectorField r = x;
  for (std::size_t k = a.proper_index(); k >= 1; --k)
    for (unsigned e = 0; e < a[k]; ++e) r = lie_bracket(y[k - 1], r);
  return r;
}

VectorField pushforward(const RatMap& t, const RatMap& t_inv, const VectorField& x, Degree d) {
  std::size_t n = x.n();
  if (t.size() != n || t_inv.size() != n) throw std::invalid_argument("pushforward dimension mismatch");
  std::vector<Jet<Rational>> w;
  for (std::size_t i = 0; i < n; ++i) {
    Jet<Rational> s(n);
    for (std::size_t j = 1; j <= n; ++j) {
      Jet<Rational> dt = t[i].derivative(j);
      if (dt.empty() && dt.exact()) continue;
      s += dt * x.c[j - 1];
    }
    w.push_back(s);
  }
  bool keep = t.exact() && t_inv.exact() && x.exact();
  std::vector<Jet<Rational>> out;
  for (const auto& wi : w) out.push_back(compose(wi, t_inv.comps, keep ? kExact : d));
  return VectorField(out);
}

VectorField pushforward(const RatMap& t, const VectorField& x, Degree d) {
  return pushforward(t, invert_map(t, d), x, d);
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace trilin
