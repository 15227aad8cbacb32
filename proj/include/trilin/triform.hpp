#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trilin/indexsets.hpp"
#include "trilin/liegeo.hpp"
#include "trilin/polymap.hpp"

namespace trilin {

// xdot_i = f_i(x_1..x_{i+1}) for i < n, xdot_n = f_n(x) + g_n(x) v
struct LowerTriangularSystem {
  std::vector<std::string> names;
  std::vector<Jet<Rational>> f;
  Jet<Rational> g;

  std::size_t n() const { return f.size(); }
  Degree valid_to() const;
};

struct Diagnostic {
  std::string code;
  std::size_t slot = 0;
  std::string message;
};

std::vector<Diagnostic> validate(const LowerTriangularSystem& sys);

struct TypeDescriptor {
  std::vector<MultiIndex> l_type;  // slots 1..n-1
  std::vector<IndexSet> e_type;
  std::vector<bool> complete;
  Degree valid_to = kExact;
};

std::vector<MultiIndex> l_type(const LowerTriangularSystem& sys);
TypeDescriptor e_type(const LowerTriangularSystem& sys);  // l_type left empty
TypeDescriptor classify(const LowerTriangularSystem& sys);

std::string l_type_str(const std::vector<MultiIndex>& l);
std::string e_type_str(const std::vector<IndexSet>& e);

// Equal on complete slots; slots incomplete on either side are compared on
// indices of order <= min(valid_to). why receives the first difference.
bool types_agree(const TypeDescriptor& a, const TypeDescriptor& b, std::string* why = nullptr,
                 bool* partial = nullptr);

// y = U(x); result in y coordinates truncated at d
LowerTriangularSystem transform_system(const LowerTriangularSystem& sys, const TriangularMap& u, Degree d);

AffineSystem to_affine(const LowerTriangularSystem& sys);

struct ShapeCheck {
  std::optional<LowerTriangularSystem> sys;
  std::vector<std::string> violations;
};
ShapeCheck as_lower_triangular(const AffineSystem& sys);

// pushes an affine system through y = T(x)
AffineSystem transform_affine(const AffineSystem& sys, const RatMap& t, Degree d);

struct InvarianceViolation {
  std::size_t trial = 0;
  std::string map;
  std::string reason;
};

struct InvarianceReport {
  std::size_t trials = 0;
  std::size_t partial_slots = 0;  // comparisons limited to a degree
  Degree degree = kExact;
  std::vector<InvarianceViolation> violations;
  bool ok() const { return violations.empty(); }
};

InvarianceReport check_type_invariance(const LowerTriangularSystem& sys, std::size_t trials, std::uint64_t seed,
                                       Degree d = 9);
// one specific map (not necessarily triangular)
InvarianceReport check_map_invariance(const LowerTriangularSystem& sys, const RatMap& t, Degree d);

}  // namespace trilin
