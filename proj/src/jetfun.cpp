#include "trilin/jetfun.hpp"

namespace trilin {

IndexSet indices_of(const Jet<Rational>& p, std::size_t i) {
  IndexSet s;
  if (p.valid_to() < 0) return s;
  for (const auto& [a, c] : p.terms())
    if (a.proper_index() == i) s.insert(a.padded(std::max(i, p.num_vars())));
  return s;
}

IndexSet all_indices_of(const Jet<Rational>& p) {
  IndexSet s;
  for (const auto& t : p.terms()) s.insert(t.first);
  return s;
}

bool slot_complete(const Jet<Rational>& p, std::size_t i) {
  if (p.exact()) return true;
  if (p.valid_to() < 0) return false;
  if (i == 0) return true;
  return lambda_bound(indices_of(p, i), i).has_value();
}

MultiIndex least_of(const Jet<Rational>& p, std::size_t i) {
  IndexSet s = indices_of(p, i);
  if (s.empty())
    throw EmptySlotError(i, "slot " + std::to_string(i) + " has no proper " + std::to_string(i) +
                                "-index within degree " + deg_str(p.valid_to()));
  return least(s, i);
}

EssentialResult essential_of(const Jet<Rational>& p) {
  std::size_t m = p.num_vars();
  EssentialResult r;
  for (std::size_t i = 0; i <= m; ++i) {
    r.w.push_back(weakly_essential_alg1(indices_of(p, i), i));
    r.complete.push_back(slot_complete(p, i));
  }
  r.e = essential_sets(r.w);
  return r;
}

bool is_essential_index(const Jet<Rational>& p, const MultiIndex& alpha) {
  if (sgn(p.coeff(alpha)) == 0) return false;
  for (const auto& [b, c] : p.terms()) {
    if (b == alpha || b.order() > alpha.order()) continue;
    if (generates(b, alpha)) return false;
  }
  return true;
}

}  // namespace trilin
