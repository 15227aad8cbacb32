#include "trilin/polymatrix.hpp"

#include <stdexcept>

namespace trilin {

namespace {

void require_exact(const PolyMat& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.exact()) throw std::invalid_argument("symbolic elimination needs exact polynomial entries");
}

bool divides_monomial(const MultiIndex& b, const MultiIndex& a) { return componentwise_le(b, a); }

MultiIndex monomial_quotient(const MultiIndex& a, const MultiIndex& b, std::size_t n) {
  MultiIndex q(n);
  for (std::size_t k = 1; k <= a.proper_index(); ++k) q.set(k, a[k] - b[k]);
  return q;
}

// fraction-free forward elimination; returns the rank and leaves the last
// pivot in *last
std::size_t bareiss(PolyMat& m, Poly* last) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t nv = 0;
  for (const auto& row : m)
    for (const auto& e : row) nv = std::max(nv, e.num_vars());
  Poly prev = Poly::constant(nv, Rational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // sparsest nonzero pivot keeps intermediate entries small
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].empty() && (p == rows || m[i][c].size() < m[p][c].size())) p = i;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Poly piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly t = piv * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = exact_divide(t, prev);
      }
      m[i][c] = Poly(nv);
    }
    prev = piv;
    ++r;
  }
  if (last) *last = prev;
  return r;
}

}  // namespace

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (!a.exact() || !b.exact()) throw std::invalid_argument("exact division needs exact polynomials");
  std::size_t n = std::max(a.num_vars(), b.num_vars());
  if (b.size() == 1 && b.terms().begin()->first.is_zero()) {
    Poly q = a;
    q *= 1 / b.terms().begin()->second;
    return q.with_num_vars(n);
  }
  Poly rem = a.with_num_vars(n);
  Poly q(n);
  const auto& [lb, cb] = *b.terms().rbegin();
  while (!rem.empty()) {
    const auto& [la, ca] = *rem.terms().rbegin();
    if (!divides_monomial(lb, la)) throw std::domain_error("polynomial not divisible");
    MultiIndex mono = monomial_quotient(la, lb, n);
    Rational coef = ca / cb;
    q.add_term(mono, coef);
    for (const auto& [bb, bc] : b.terms()) rem.add_term(mono + bb, -coef * bc);
  }
  return q;
}

std::size_t generic_rank(PolyMat m) {
  require_exact(m);
  return bareiss(m, nullptr);
}

Poly determinant(PolyMat m) {
  require_exact(m);
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(0, Rational(1));
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t nv = 0;
  for (const auto& row : m)
    for (const auto& e : row) nv = std::max(nv, e.num_vars());
  // track row swaps for the sign
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Poly prev = Poly::constant(nv, Rational(1));
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m[i][c].empty() && (p == n || m[i][c].size() < m[p][c].size())) p = i;
    if (p == n) return Poly(nv);
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    const Poly piv = m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) m[i][j] = exact_divide(piv * m[i][j] - m[i][c] * m[c][j], prev);
      m[i][c] = Poly(nv);
    }
    prev = piv;
  }
  Poly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d.with_num_vars(nv);
}

PolyMat adjugate(const PolyMat& m) {
  std::size_t n = m.size();
  std::size_t nv = 0;
  for (const auto& row : m)
    for (const auto& e : row) nv = std::max(nv, e.num_vars());
  PolyMat adj(n, std::vector<Poly>(n, Poly(nv)));
  if (n == 1) {
    adj[0][0] = Poly::constant(nv, Rational(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Poly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      Poly d = determinant(minor).with_num_vars(nv);
      // adj = transpose of the cofactor matrix
      adj[j][i] = ((i + j) % 2) ? -d : d;
    }
  }
  return adj;
}

RatMat evaluate(const PolyMat& m, const RatVec& point) {
  RatMat r;
  for (const auto& row : m) {
    RatVec v;
    for (const auto& e : row) v.push_back(e.evaluate(point));
    r.push_back(v);
  }
  return r;
}

}  // namespace trilin
