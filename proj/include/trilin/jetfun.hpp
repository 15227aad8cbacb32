#pragma once

#include <stdexcept>
#include <vector>

#include "trilin/indexsets.hpp"
#include "trilin/jet.hpp"

namespace trilin {

class EmptySlotError : public std::runtime_error {
 public:
  EmptySlotError(std::size_t slot, const std::string& what) : std::runtime_error(what), slot_(slot) {}
  std::size_t slot() const { return slot_; }

 private:
  std::size_t slot_;
};

// proper i-indices with nonzero coefficient and order <= valid_to
IndexSet indices_of(const Jet<Rational>& p, std::size_t i);
// all indices of p within valid_to
IndexSet all_indices_of(const Jet<Rational>& p);

// exact, or some lambda^{i,k} with k <= valid_to is an index of p
bool slot_complete(const Jet<Rational>& p, std::size_t i);

MultiIndex least_of(const Jet<Rational>& p, std::size_t i);

struct EssentialResult {
  std::vector<IndexSet> w;  // slots 0..m
  std::vector<IndexSet> e;
  std::vector<bool> complete;
};
EssentialResult essential_of(const Jet<Rational>& p);

// alpha is an index of p not generated by any other index of p
bool is_essential_index(const Jet<Rational>& p, const MultiIndex& alpha);

}  // namespace trilin
