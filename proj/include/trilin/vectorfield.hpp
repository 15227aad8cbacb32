#pragma once

#include <string>
#include <vector>

#include "trilin/linalg.hpp"
#include "trilin/polymap.hpp"

namespace trilin {

// Components are jets in n variables.
struct VectorField {
  std::vector<Jet<Rational>> c;

  VectorField() = default;
  explicit VectorField(std::vector<Jet<Rational>> comps);
  static VectorField zero(std::size_t n);
  static VectorField coordinate(std::size_t n, std::size_t k);
  static VectorField constant(const RatVec& v);

  std::size_t n() const { return c.size(); }
  Degree valid_to() const;
  bool exact() const { return valid_to() == kExact; }
  bool is_zero() const;  // no stored terms in any component
  std::size_t term_count() const;
  const Jet<Rational>& operator[](std::size_t i) const { return c[i]; }

  // throws if the value at 0 is not known
  RatVec at_origin() const;
  RatVec at(const RatVec& point) const;
  // X(h) = sum_j X_j dh/dxi_j
  Jet<Rational> apply(const Jet<Rational>& h) const;
  VectorField truncated(Degree d) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Jet<Rational>& h, const VectorField& x);
  friend VectorField operator*(const Rational& s, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c == b.c; }

  std::string str(const std::vector<std::string>& names) const;
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);
// ad_{Y^1}^{a_1} ... ad_{Y^k}^{a_k} X with the Y^k powers applied first
VectorField ad_multi(const std::vector<VectorField>& y, const MultiIndex& a, const VectorField& x);

// (DT . X) o T^{-1}; exact when T, its inverse and X are exact
VectorField pushforward(const RatMap& t, const VectorField& x, Degree d);
VectorField pushforward(const RatMap& t, const RatMap& t_inv, const VectorField& x, Degree d);

std::string vec_str(const RatVec& v);

}  // namespace trilin
