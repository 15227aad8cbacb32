#include "trilin/triform.hpp"

#include <future>
#include <random>
#include <thread>

#include "trilin/jetfun.hpp"
#include "trilin/randgen.hpp"

namespace trilin {

Degree LowerTriangularSystem::valid_to() const {
  Degree d = g.valid_to();
  for (const auto& fi : f) d = std::min(d, fi.valid_to());
  return d;
}

std::vector<Diagnostic> validate(const LowerTriangularSystem& sys) {
  std::vector<Diagnostic> out;
  std::size_t n = sys.n();
  if (n == 0) {
    out.push_back({"empty", 0, "system has no states"});
    return out;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& fi = sys.f[i - 1];
    if (fi.num_vars() != n) {
      out.push_back({"num_vars", i, "f" + std::to_string(i) + " is not a jet in " + std::to_string(n) + " variables"});
      continue;
    }
    if (fi.valid_to() < 0) {
      out.push_back({"unknown_value", i, "f" + std::to_string(i) + " has no known terms"});
      continue;
    }
    if (sgn(fi.constant_term()) != 0)
      out.push_back({"f_at_origin", i, "f" + std::to_string(i) + "(0) != 0"});
    for (std::size_t k = i + 2; k <= n; ++k)
      if (fi.depends_on(k))
        out.push_back({"shape", i, "f" + std::to_string(i) + " depends on " + sys.names[k - 1]});
    if (i < n && !fi.depends_on(i + 1))
      out.push_back({"coupling", i,
                     "df" + std::to_string(i) + "/d" + sys.names[i] + " vanishes identically within degree " +
                         deg_str(fi.valid_to())});
  }
  if (sys.g.valid_to() < 0 || sgn(sys.g.constant_term()) == 0)
    out.push_back({"g_at_origin", n, "g_n(0) = 0"});
  return out;
}

std::vector<MultiIndex> l_type(const LowerTriangularSystem& sys) {
  std::vector<MultiIndex> l;
  for (std::size_t i = 1; i < sys.n(); ++i) l.push_back(least_of(sys.f[i - 1], i + 1).padded(i + 1));
  return l;
}

TypeDescriptor e_type(const LowerTriangularSystem& sys) {
  TypeDescriptor t;
  t.valid_to = sys.valid_to();
  for (std::size_t i = 1; i < sys.n(); ++i) {
    // f_i as a function of x_1..x_{i+1}: slot i+1 is the top slot, E = W there
    const auto& fi = sys.f[i - 1];
    IndexSet e;
    for (const auto& a : weakly_essential_alg1(indices_of(fi, i + 1), i + 1)) e.insert(a.padded(i + 1));
    t.e_type.push_back(e);
    t.complete.push_back(slot_complete(fi, i + 1));
  }
  return t;
}

TypeDescriptor classify(const LowerTriangularSystem& sys) {
  TypeDescriptor t = e_type(sys);
  t.l_type = l_type(sys);
  return t;
}

std::string l_type_str(const std::vector<MultiIndex>& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + l[i].str();
  return s + "]";
}

std::string e_type_str(const std::vector<IndexSet>& e) {
  std::string s = "[[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + to_string(e[i]);
  return s + "]]";
}

namespace {

IndexSet up_to(const IndexSet& s, Degree d) {
  IndexSet r;
  for (const auto& a : s)
    if (static_cast<Degree>(a.order()) <= d) r.insert(a);
  return r;
}

}  // namespace

bool types_agree(const TypeDescriptor& a, const TypeDescriptor& b, std::string* why, bool* partial) {
  if (partial) *partial = false;
  if (a.e_type.size() != b.e_type.size()) {
    if (why) *why = "different number of slots";
    return false;
  }
  Degree d = std::min(a.valid_to, b.valid_to);
  for (std::size_t s = 0; s < a.e_type.size(); ++s) {
    std::string slot = "slot " + std::to_string(s + 1);
    bool full = a.complete[s] && b.complete[s];
    IndexSet ea = full ? a.e_type[s] : up_to(a.e_type[s], d);
    IndexSet eb = full ? b.e_type[s] : up_to(b.e_type[s], d);
    if (!full && partial) *partial = true;
    if (ea != eb) {
      if (why) *why = slot + ": e-type " + to_string(a.e_type[s]) + " vs " + to_string(b.e_type[s]);
      return false;
    }
    if (s < a.l_type.size() && s < b.l_type.size() && !(a.l_type[s] == b.l_type[s])) {
      bool comparable = full || (static_cast<Degree>(a.l_type[s].order()) <= d &&
                                 static_cast<Degree>(b.l_type[s].order()) <= d);
      if (comparable) {
        if (why) *why = slot + ": l-type " + a.l_type[s].str() + " vs " + b.l_type[s].str();
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::string> shape_violations(const std::vector<Jet<Rational>>& f, const std::vector<Jet<Rational>>& g,
                                          const std::vector<std::string>& names) {
  std::vector<std::string> v;
  std::size_t n = f.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 2; k <= n; ++k)
      if (f[i - 1].depends_on(k))
        v.push_back("result not lower triangular: df" + std::to_string(i) + "/d" + names[k - 1] +
                    " is not identically zero");
    if (i < n && !g[i - 1].empty())
      v.push_back("result not lower triangular: input enters equation " + std::to_string(i));
  }
  return v;
}

}  // namespace

ShapeCheck as_lower_triangular(const AffineSystem& sys) {
  ShapeCheck r;
  r.violations = shape_violations(sys.f.c, sys.g.c, sys.names);
  if (!r.violations.empty()) return r;
  LowerTriangularSystem t;
  t.names = sys.names;
  t.f = sys.f.c;
  t.g = sys.g.c.back();
  r.sys = t;
  return r;
}

AffineSystem to_affine(const LowerTriangularSystem& sys) {
  AffineSystem a;
  std::size_t n = sys.n();
  a.names = sys.names;
  a.f = VectorField(sys.f);
  a.g = VectorField::zero(n);
  a.g.c[n - 1] = sys.g;
  return a;
}

AffineSystem transform_affine(const AffineSystem& sys, const RatMap& t, Degree d) {
  RatMap inv = invert_map(t, d);
  AffineSystem r;
  r.names = sys.names;
  r.f = pushforward(t, inv, sys.f, d);
  r.g = pushforward(t, inv, sys.g, d);
  return r;
}

LowerTriangularSystem transform_system(const LowerTriangularSystem& sys, const TriangularMap& u, Degree d) {
  std::size_t n = sys.n();
  if (u.size() != n) throw std::invalid_argument("map and system dimensions differ");
  Degree dd = std::min({d, sys.valid_to(), u.valid_to()});
  TriangularMap v = invert_triangular(u, dd);
  const RatMap& um = u.map();
  LowerTriangularSystem r;
  r.names = sys.names;
  for (std::size_t i = 1; i <= n; ++i) {
    Jet<Rational> s(n);
    for (std::size_t k = 1; k <= i; ++k) {
      Jet<Rational> du = um[i - 1].derivative(k);
      if (du.empty()) continue;
      s += du * sys.f[k - 1];
    }
    r.f.push_back(compose(s, v.map().comps, dd));
  }
  r.g = compose(um[n - 1].derivative(n) * sys.g, v.map().comps, dd);
  auto bad = shape_violations(r.f, std::vector<Jet<Rational>>(n, Jet<Rational>(n)), r.names);
  if (!bad.empty()) throw std::logic_error("internal error: triangular map broke the shape: " + bad.front());
  return r;
}

namespace {

std::string describe_type(const TypeDescriptor& t) { return l_type_str(t.l_type) + " " + e_type_str(t.e_type); }

void compare_into(const TypeDescriptor& orig, const LowerTriangularSystem& out, std::size_t trial,
                  const std::string& map_text, InvarianceReport& rep) {
  auto diags = validate(out);
  if (!diags.empty()) {
    rep.violations.push_back({trial, map_text, "transformed system invalid: " + diags.front().message});
    return;
  }
  TypeDescriptor t;
  try {
    t = classify(out);
  } catch (const EmptySlotError& e) {
    rep.violations.push_back({trial, map_text, e.what()});
    return;
  }
  std::string why;
  bool partial = false;
  if (!types_agree(orig, t, &why, &partial))
    rep.violations.push_back({trial, map_text, why + " (original " + describe_type(orig) + ", transformed " +
                                                   describe_type(t) + ")"});
  if (partial) ++rep.partial_slots;
}

}  // namespace

InvarianceReport check_map_invariance(const LowerTriangularSystem& sys, const RatMap& t, Degree d) {
  InvarianceReport rep;
  rep.trials = 1;
  rep.degree = std::min(d, sys.valid_to());
  TypeDescriptor orig = classify(sys);
  std::string text = map_to_string(t, default_var_names(t.size()), sys.names);
  AffineSystem a = transform_affine(to_affine(sys), t, rep.degree);
  for (auto& c : a.f.c) c.truncate(rep.degree);
  for (auto& c : a.g.c) c.truncate(rep.degree);
  ShapeCheck sc = as_lower_triangular(a);
  if (!sc.sys) {
    for (const auto& v : sc.violations) rep.violations.push_back({0, text, v});
    return rep;
  }
  compare_into(orig, *sc.sys, 0, text, rep);
  return rep;
}

InvarianceReport check_type_invariance(const LowerTriangularSystem& sys, std::size_t trials, std::uint64_t seed,
                                       Degree d) {
  InvarianceReport rep;
  rep.trials = trials;
  rep.degree = std::min(d, sys.valid_to());
  TypeDescriptor orig = classify(sys);
  std::size_t n = sys.n();

  auto run_trial = [&](std::size_t trial) {
    InvarianceReport part;
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(ss);
    RatMap m = random_unitriangular_map(n, rng);
    std::string text = map_to_string(m, sys.names, sys.names);
    LowerTriangularSystem out = transform_system(sys, TriangularMap(m), rep.degree);
    compare_into(orig, out, trial, text, part);
    return part;
  };

  std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<InvarianceReport>>> futs;
  for (std::size_t w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<InvarianceReport> parts;
      for (std::size_t t = w; t < trials; t += workers) parts.push_back(run_trial(t));
      return parts;
    }));
  }
  std::vector<InvarianceViolation> all;
  for (auto& f : futs)
    for (auto& p : f.get()) {
      rep.partial_slots += p.partial_slots;
      all.insert(all.end(), p.violations.begin(), p.violations.end());
    }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.trial < b.trial; });
  rep.violations = all;
  return rep;
}

}  // namespace trilin
