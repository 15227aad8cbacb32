#pragma once

#include <optional>
#include <set>
#include <vector>

#include "trilin/multiindex.hpp"

namespace trilin {

// Finite sets kept in lex order.
using IndexSet = std::set<MultiIndex>;

struct ComplementResult {
  bool finite = false;
  IndexSet elements;  // meaningful only when finite
  unsigned bound = 0; // minimal k with lambda^{i,k} generated
};

std::string to_string(const IndexSet& s);
IndexSet parse_index_set(std::string_view text);

// every element of s has proper index i
bool all_proper(const IndexSet& s, std::size_t i);
IndexSet proper_part(const IndexSet& s, std::size_t i);

MultiIndex least(const IndexSet& s, std::size_t i);
bool in_generated(const IndexSet& s, const MultiIndex& b);

// elements of proper index other than i are ignored
IndexSet weakly_essential_alg1(const IndexSet& s, std::size_t i);
IndexSet weakly_essential_alg2(const IndexSet& s, std::size_t i);

// w[i] = W_i for slots i = 0..m; returns E_0..E_m
std::vector<IndexSet> essential_sets(const std::vector<IndexSet>& w);

// smallest k with lambda^{i,k} in G_i(s), if any
std::optional<unsigned> lambda_bound(const IndexSet& s, std::size_t i);
ComplementResult complement_of_generated(const IndexSet& e, std::size_t i);

// all proper i-indices of order <= max_order, in lex order
std::vector<MultiIndex> proper_indices_up_to(std::size_t i, unsigned max_order);

}  // namespace trilin
