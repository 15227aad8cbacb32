#pragma once

#include <string>
#include <vector>

#include "trilin/jet.hpp"
#include "trilin/linalg.hpp"

namespace trilin {

// Polynomial map b = M(a); component k is b_k as a jet in a_1..a_n.
template <class S>
struct PolyMap {
  std::vector<Jet<S>> comps;

  PolyMap() = default;
  explicit PolyMap(std::vector<Jet<S>> c) : comps(std::move(c)) {}

  static PolyMap identity(std::size_t n) {
    PolyMap m;
    for (std::size_t k = 1; k <= n; ++k) m.comps.push_back(Jet<S>::variable(n, k));
    return m;
  }

  std::size_t size() const { return comps.size(); }
  Degree valid_to() const {
    Degree d = kExact;
    for (const auto& c : comps) d = std::min(d, c.valid_to());
    return d;
  }
  bool exact() const { return valid_to() == kExact; }
  const Jet<S>& operator[](std::size_t k) const { return comps[k]; }

  template <class T>
  PolyMap<T> cast() const {
    PolyMap<T> r;
    for (const auto& c : comps) r.comps.push_back(c.template cast<T>());
    return r;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps == b.comps; }
};

using RatMap = PolyMap<Rational>;

// outer(inner(.)), validity capped at limit
template <class S>
PolyMap<S> compose_maps(const PolyMap<S>& outer, const PolyMap<S>& inner, Degree limit = kExact) {
  PolyMap<S> r;
  for (const auto& c : outer.comps) r.comps.push_back(compose(c, inner.comps, limit));
  return r;
}

template <class S>
PolyMap<S> truncated(const PolyMap<S>& m, Degree d) {
  PolyMap<S> r = m;
  for (auto& c : r.comps) c.truncate(d);
  return r;
}

// Reasons a map fails to be a local lower triangular coordinate change.
std::vector<std::string> triangular_violations(const RatMap& m);

// Lower triangular map; construction enforces shape, vanishing at 0 and a
// nonzero Jacobian diagonal at 0.
class TriangularMap {
 public:
  explicit TriangularMap(RatMap m);
  static TriangularMap identity(std::size_t n) { return TriangularMap(RatMap::identity(n)); }
  const RatMap& map() const { return m_; }
  std::size_t size() const { return m_.size(); }
  Degree valid_to() const { return m_.valid_to(); }

 private:
  RatMap m_;
};

RatMat linear_part(const RatMap& m);

// Inverse truncated at D. When the input is exact and the truncated inverse
// recomposes exactly to the identity, the result is marked exact.
TriangularMap invert_triangular(const TriangularMap& m, Degree d);
// General local inverse; throws on a singular Jacobian at 0 or a nonzero
// constant term.
RatMap invert_map(const RatMap& m, Degree d);

Jet<Rational> compose_triangular(const Jet<Rational>& p, const TriangularMap& v);

std::string map_to_string(const RatMap& m, const std::vector<std::string>& out_names,
                          const std::vector<std::string>& in_names);

}  // namespace trilin
