#include "trilin/linalg.hpp"

#include <stdexcept>

namespace trilin {

namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(RatMat& m, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < m[r].size(); ++k) m[r][k] *= inv;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || sgn(m[q][c]) == 0) continue;
      Rational f = m[q][c];
      for (std::size_t k = c; k < m[q].size(); ++k) m[q][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(RatMat m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::optional<RatMat> inverse(const RatMat& m) {
  std::size_t n = m.size();
  RatMat a(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  if (rref(a, n).size() < n) return std::nullopt;
  RatMat r(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a[i][n + j];
  return r;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
  std::size_t cols = rows ? a[0].size() : 0;
  RatMat m(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  auto piv = rref(m, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RatVec x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
  return x;
}

bool in_row_span(const RatMat& rows, const RatVec& v) {
  RatMat m = rows;
  std::size_t r0 = rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace trilin
