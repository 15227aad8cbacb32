#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilin/polymap.hpp"

namespace trilin {

class EliminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EliminationResult {
  PolyMap<Complex> map;             // x = V(y), lower triangular
  bool real = false;                // every coefficient of map is real
  std::optional<RatMap> exact_map;  // set when the root found is rational
  Complex target_coeff;             // coefficient of y^alpha in p(V(y))
  double max_coeff = 0;             // largest |coefficient| of p(V(y)) up to |alpha|
  std::string method;
  std::vector<Complex> roots;       // roots of the univariate equation used
};

// Univariate roots of sum a[k] t^k via the companion matrix, Newton polished.
std::vector<Complex> polynomial_roots(const std::vector<Rational>& a);

// Finds a triangular V with alpha not an index of p(V(y)).
// Throws EliminationError if alpha is essential, is not an index of p, or
// the solver fails.
EliminationResult eliminate_index(const Jet<Rational>& p, const MultiIndex& alpha, std::uint64_t seed = 0);

}  // namespace trilin
