#pragma once

#include <random>

#include "trilin/polymap.hpp"

namespace trilin {

struct LowerTriangularSystem;

struct RandomMapConfig {
  int coeff_range = 3;  // integer coefficients in [-coeff_range, coeff_range]
  unsigned degree = 3;
  unsigned max_terms = 3;  // extra terms per component
};

Rational random_nonzero(std::mt19937_64& rng, int range);

// y_i = x_i + p_i(x_1..x_{i-1}); the inverse is polynomial
RatMap random_unitriangular_map(std::size_t n, std::mt19937_64& rng, const RandomMapConfig& cfg = {});
// y_i = d_i x_i + p_i(x_1..x_i) with nonlinear dependence on x_i allowed
RatMap random_triangular_map(std::size_t n, std::mt19937_64& rng, const RandomMapConfig& cfg = {});
// L o E with L unimodular integer and E one quadratic shear; inverse of degree <= 2
RatMap random_invertible_map_deg2(std::size_t n, std::mt19937_64& rng, int range = 2);

// random monomial-sum jet in variables x_1..x_vars (of n) with orders in [lo, hi]
Jet<Rational> random_jet(std::size_t n, std::size_t vars, unsigned lo, unsigned hi, unsigned terms,
                         std::mt19937_64& rng, int range = 3);

// valid lower triangular system; with_lambda adds a pure x_{i+1}^k term to
// every f_i so all slots are complete
LowerTriangularSystem random_triangular_system(std::size_t n, std::mt19937_64& rng, unsigned degree = 3,
                                               bool with_lambda = true);

}  // namespace trilin
