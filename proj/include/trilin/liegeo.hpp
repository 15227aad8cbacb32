#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trilin/indexsets.hpp"
#include "trilin/vectorfield.hpp"

namespace trilin {

struct AffineSystem {
  std::vector<std::string> names;
  VectorField f;  // drift
  VectorField g;  // input field
  std::size_t n() const { return f.n(); }
};

using Fields = std::vector<VectorField>;

std::size_t rank_at_origin(const Fields& gens);
bool membership_at_origin(const VectorField& v, const Fields& gens);

// Rank over rational functions, cross-checked at sample points.
std::size_t generic_rank(const Fields& gens, std::uint64_t seed = 0);
bool generic_membership(const VectorField& v, const Fields& gens, std::uint64_t seed = 0);
bool involutive(const Fields& gens, std::uint64_t seed = 0);

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct LevelCheck {
  std::size_t level = 0;
  Verdict verdict = Verdict::pass;
  std::size_t hat_rank = 0;      // generic dimension of the bracket-built distribution
  std::size_t witness_rank = 0;  // generic rank of the witness span
  std::size_t origin_rank = 0;   // rank of the witness span at 0
  std::string note;
};

struct TriangularizabilityReport {
  Verdict verdict = Verdict::pass;
  std::size_t failing_level = 0;  // 0 when every level passed
  std::vector<LevelCheck> levels; // level n first
  std::vector<std::string> diagnostics;
};

// witnesses[i-1] = G^i, i = 1..n
TriangularizabilityReport check_triangularizable(const AffineSystem& sys, const Fields& witnesses,
                                                 std::uint64_t seed = 0);
// G^n = G, G^i = [G^{i+1}, F]
Fields canonical_witnesses(const AffineSystem& sys);
// the same chain, with each bracket reduced modulo the previous fields and
// stripped of a common polynomial factor
Fields normalized_witnesses(const AffineSystem& sys);

struct YCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
// x[l-1] = X^l spanning D^l = span{X^l..X^n}; y[k-1] = Y^k
YCheck verify_y_fields(const Fields& x, const Fields& y, std::uint64_t seed = 0);

struct YSolve {
  bool sat = false;
  unsigned degree = 0;
  Fields y;
};
// Y^n = X^n, Y^j = sum_{k=j}^{n-1} h^j_k X^k with polynomial h of total
// degree <= ansatz_degree and h^j_j(0) = 1.
YSolve solve_y_fields(const Fields& x, unsigned ansatz_degree, std::uint64_t seed = 0);

// Bracket-based type determination. Slot i = 1..n-1 concerns the proper
// (i+1)-indices alpha and the test ad_Y^alpha F(0) in D^{i+1}(0).
struct BracketContext {
  VectorField f;
  Fields x;  // chain generators X^1..X^n
  Fields y;  // Y^1..Y^n
  std::size_t exact_term_limit = 20000;  // above this, fields are truncated to what remains needed
};

struct BracketProbe {
  MultiIndex index;
  RatVec value;  // ad_Y^index F(0)
  bool member = false;
};

enum class SlotStatus { confirmed, confirmed_up_to, refuted, bound_required };
const char* to_string(SlotStatus s);

struct SlotVerdict {
  std::size_t slot = 0;
  SlotStatus status = SlotStatus::confirmed;
  unsigned bound = 0;              // for confirmed_up_to
  std::optional<MultiIndex> offending;
  std::string note;
  std::vector<BracketProbe> probes;  // essential candidates and complement checks
  std::size_t nodes_visited = 0;
};

SlotVerdict bracket_l_slot(const BracketContext& ctx, std::size_t slot, const MultiIndex& candidate, unsigned bound);
SlotVerdict bracket_e_slot(const BracketContext& ctx, std::size_t slot, const IndexSet& candidate,
                           std::optional<unsigned> bound);
std::vector<SlotVerdict> bracket_l_type(const BracketContext& ctx, const std::vector<MultiIndex>& candidate,
                                        unsigned bound);
std::vector<SlotVerdict> bracket_e_type(const BracketContext& ctx, const std::vector<IndexSet>& candidate,
                                        std::optional<unsigned> bound);

struct DiscoveredSlot {
  std::size_t slot = 0;
  IndexSet e;
  MultiIndex least;
  bool complete = false;  // every index above the bound is generated by e
  unsigned bound = 0;
  std::vector<BracketProbe> probes;  // non-members found
};
DiscoveredSlot discover_e_slot(const BracketContext& ctx, std::size_t slot, unsigned bound);

}  // namespace trilin
