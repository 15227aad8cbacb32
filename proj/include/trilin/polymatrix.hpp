#pragma once

#include <vector>

#include "trilin/jet.hpp"
#include "trilin/linalg.hpp"

namespace trilin {

using Poly = Jet<Rational>;
using PolyMat = std::vector<std::vector<Poly>>;

// a / b for exact polynomials; throws std::domain_error if b does not divide a
Poly exact_divide(const Poly& a, const Poly& b);

// Rank over the rational function field, by fraction-free (Bareiss)
// elimination. Entries must be exact.
std::size_t generic_rank(PolyMat m);
Poly determinant(PolyMat m);
// adj(m) with adj(m) m = det(m) I
PolyMat adjugate(const PolyMat& m);

RatMat evaluate(const PolyMat& m, const RatVec& point);

}  // namespace trilin
