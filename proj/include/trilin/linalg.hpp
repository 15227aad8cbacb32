#pragma once

#include <optional>
#include <vector>

#include "trilin/scalar.hpp"

namespace trilin {

// Dense row-major matrices over Q.
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

std::size_t rank(RatMat m);
std::optional<RatMat> inverse(const RatMat& m);
// any solution of a x = b, or nullopt if inconsistent
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);
// v in the row span of rows?
bool in_row_span(const RatMat& rows, const RatVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);

}  // namespace trilin
