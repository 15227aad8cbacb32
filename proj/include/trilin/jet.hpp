#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilin/multiindex.hpp"
#include "trilin/scalar.hpp"

namespace trilin {

// Truncation degree. kExact marks an exact polynomial.
using Degree = long;
inline constexpr Degree kExact = std::numeric_limits<long>::max();

inline Degree deg_add(Degree a, Degree b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}
inline std::string deg_str(Degree d) { return d == kExact ? "inf" : std::to_string(d); }

// Sparse polynomial in num_vars variables whose coefficients are known
// exactly for every monomial of order <= valid_to.
template <class S>
class Jet {
 public:
  using Terms = std::map<MultiIndex, S>;
  using Traits = ScalarTraits<S>;

  Jet() = default;
  explicit Jet(std::size_t n, Degree valid_to = kExact) : n_(n), valid_(valid_to) {}

  static Jet constant(std::size_t n, const S& c) {
    Jet j(n);
    j.add_term(MultiIndex(n), c);
    return j;
  }
  static Jet variable(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw std::out_of_range("variable index out of range");
    Jet j(n);
    MultiIndex a(n);
    a.set(k, 1);
    j.add_term(a, Traits::from_int(1));
    return j;
  }
  static Jet monomial(std::size_t n, const MultiIndex& a, const S& c) {
    Jet j(n);
    j.add_term(a.padded(n), c);
    return j;
  }

  std::size_t num_vars() const { return n_; }
  Degree valid_to() const { return valid_; }
  bool exact() const { return valid_ == kExact; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? S(0) : it->second;
  }
  S constant_term() const { return coeff(MultiIndex()); }

  void add_term(const MultiIndex& a, const S& c) {
    if (a.proper_index() > n_) throw std::invalid_argument("monomial uses variable beyond num_vars");
    if (valid_ != kExact && static_cast<Degree>(a.order()) > valid_) return;
    if (Traits::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(a.padded(n_), c);
    if (!fresh) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  void truncate(Degree d) {
    if (d >= valid_) return;
    valid_ = d;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (static_cast<Degree>(it->first.order()) > d)
        it = terms_.erase(it);
      else
        ++it;
    }
  }
  Jet truncated(Degree d) const {
    Jet r = *this;
    r.truncate(d);
    return r;
  }
  // drops terms of order > d but keeps the claim of exactness of what remains
  // (used when a caller knows higher terms are irrelevant)
  Jet lower_part(Degree d) const {
    Jet r(n_, valid_);
    for (const auto& [a, c] : terms_)
      if (static_cast<Degree>(a.order()) <= d) r.terms_.emplace(a, c);
    return r;
  }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.order()));
    return d;
  }
  // lowest order present; for an empty jet the first order not known to vanish
  Degree valuation() const {
    if (terms_.empty()) return valid_ == kExact ? kExact : valid_ + 1;
    Degree v = kExact;
    for (const auto& t : terms_) v = std::min<Degree>(v, t.first.order());
    return v;
  }
  bool depends_on(std::size_t k) const {
    for (const auto& t : terms_)
      if (t.first[k] > 0) return true;
    return false;
  }
  std::size_t max_var() const {
    std::size_t m = 0;
    for (const auto& t : terms_) m = std::max(m, t.first.proper_index());
    return m;
  }

  Jet derivative(std::size_t k) const {
    if (k < 1 || k > n_) throw std::out_of_range("derivative variable out of range");
    Jet r(n_, valid_ == kExact ? kExact : valid_ - 1);
    for (const auto& [a, c] : terms_) {
      unsigned e = a[k];
      if (e == 0) continue;
      MultiIndex b = a;
      b.set(k, e - 1);
      r.add_term(b, c * Traits::from_int(static_cast<long>(e)));
    }
    return r;
  }

  Jet with_num_vars(std::size_t n) const {
    if (max_var() > n) throw std::invalid_argument("jet depends on variables beyond the new count");
    Jet r(n, valid_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a.padded(n), c);
    return r;
  }

  template <class T>
  Jet<T> cast() const {
    Jet<T> r(n_, valid_);
    for (const auto& [a, c] : terms_) r.add_term(a, cast_scalar<T>(c));
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Jet& operator+=(const Jet& o) {
    absorb_shape(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    absorb_shape(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  Jet& operator*=(const S& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const S& s) { return a *= s; }
  friend Jet operator*(const S& s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b) { return multiply(a, b, kExact); }

  friend bool operator==(const Jet& a, const Jet& b) { return a.valid_ == b.valid_ && a.terms_ == b.terms_; }

  // product with the valuation-aware validity rule, further capped at limit
  static Jet multiply(const Jet& a, const Jet& b, Degree limit) {
    Degree v = std::min({limit, deg_add(a.valid_, b.valuation()), deg_add(b.valid_, a.valuation())});
    Jet r(std::max(a.n_, b.n_), v);
    if (v < 0) return r;
    for (const auto& [x, cx] : a.terms_) {
      unsigned ox = x.order();
      if (v != kExact && static_cast<Degree>(ox) > v) continue;
      for (const auto& [y, cy] : b.terms_) {
        if (v != kExact && static_cast<Degree>(ox + y.order()) > v) continue;
        r.add_term(x + y, cx * cy);
      }
    }
    return r;
  }

  S evaluate(const std::vector<S>& point) const {
    if (point.size() < n_) throw std::invalid_argument("evaluation point has too few coordinates");
    S sum(0);
    for (const auto& [a, c] : terms_) {
      S t = c;
      for (std::size_t k = 1; k <= a.proper_index(); ++k)
        for (unsigned e = 0; e < a[k]; ++e) t *= point[k - 1];
      sum += t;
    }
    return sum;
  }

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

 private:
  template <class T>
  static T cast_scalar(const S& c);

  void absorb_shape(const Jet& o) {
    n_ = std::max(n_, o.n_);
    if (o.valid_ < valid_) truncate(o.valid_);
  }

  std::size_t n_ = 0;
  Degree valid_ = kExact;
  Terms terms_;
};

template <>
template <>
inline Rational Jet<Rational>::cast_scalar<Rational>(const Rational& c) {
  return c;
}
template <>
template <>
inline Complex Jet<Rational>::cast_scalar<Complex>(const Rational& c) {
  return Complex(c.get_d(), 0.0);
}
template <>
template <>
inline Complex Jet<Complex>::cast_scalar<Complex>(const Complex& c) {
  return c;
}

std::vector<std::string> default_var_names(std::size_t n);

template <class S>
std::string Jet<S>::str() const {
  return str(default_var_names(n_));
}

template <class S>
std::string Jet<S>::str(const std::vector<std::string>& names) const {
  std::vector<std::pair<MultiIndex, S>> ts(terms_.begin(), terms_.end());
  // graded, then the earlier variables with higher powers first
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.order() != b.first.order()) return a.first.order() < b.first.order();
    return lex_less(b.first, a.first);
  });
  std::string out;
  for (const auto& [a, c] : ts) {
    std::string mono;
    for (std::size_t k = 1; k <= a.proper_index(); ++k) {
      if (a[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += k <= names.size() ? names[k - 1] : "x" + std::to_string(k);
      if (a[k] > 1) mono += '^' + std::to_string(a[k]);
    }
    bool neg = Traits::is_negative(c);
    S mag = neg ? S(-c) : c;
    std::string cs = Traits::str(mag);
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  if (valid_ != kExact) out += " @deg " + std::to_string(valid_);
  return out;
}

// p(subs_1, .., subs_n). Output validity is capped at limit.
template <class S>
Jet<S> compose(const Jet<S>& p, const std::vector<Jet<S>>& subs, Degree limit = kExact) {
  if (subs.size() != p.num_vars())
    throw std::invalid_argument("composition dimension mismatch: jet has " + std::to_string(p.num_vars()) +
                                " variables but " + std::to_string(subs.size()) + " substitutions given");
  std::size_t out_n = 0;
  for (const auto& s : subs) out_n = std::max(out_n, s.num_vars());
  Degree v = limit;
  Degree vmin = kExact;
  for (std::size_t k = 1; k <= p.num_vars(); ++k) {
    if (!p.depends_on(k)) continue;
    v = std::min(v, subs[k - 1].valid_to());
    vmin = std::min(vmin, subs[k - 1].valuation());
  }
  if (!p.exact()) {
    if (vmin == 0) {
      v = -1;
    } else if (vmin != kExact) {
      long long bound = (static_cast<long long>(p.valid_to()) + 1) * vmin - 1;
      v = std::min<Degree>(v, static_cast<Degree>(bound));
    }
  }
  Jet<S> r(out_n, v);
  if (v < 0) return r;
  std::vector<std::vector<Jet<S>>> pw(p.num_vars());
  auto power = [&](std::size_t k, unsigned e) -> const Jet<S>& {
    auto& c = pw[k - 1];
    if (c.empty()) c.push_back(Jet<S>::constant(out_n, ScalarTraits<S>::from_int(1)));
    while (c.size() <= e) c.push_back(Jet<S>::multiply(c.back(), subs[k - 1], v));
    return c[e];
  };
  for (const auto& [a, c] : p.terms()) {
    Jet<S> t = Jet<S>::constant(out_n, c);
    for (std::size_t k = 1; k <= a.proper_index(); ++k)
      if (a[k] > 0) t = Jet<S>::multiply(t, power(k, a[k]), v);
    t.truncate(v);
    r += t;
  }
  r.truncate(v);
  return r;
}

template <class S>
bool equal_up_to(const Jet<S>& a, const Jet<S>& b, Degree d) {
  return a.lower_part(d).terms() == b.lower_part(d).terms();
}

}  // namespace trilin
