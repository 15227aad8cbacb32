#include "trilin/commands.hpp"

#include <algorithm>
#include <sstream>

#include "trilin/eliminate.hpp"
#include "trilin/jetfun.hpp"
#include "trilin/parser.hpp"
#include "trilin/sysfile.hpp"

namespace trilin {

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Degree degree_for(const RunConfig& cfg, const SystemFile& s) {
  if (cfg.deg) return *cfg.deg;
  if (s.deg) return *s.deg;
  return kDefaultDegree;
}

json types_json(const TypeDescriptor& t) {
  json l = json::array(), e = json::array(), c = json::array();
  for (const auto& a : t.l_type) l.push_back(a.str());
  for (const auto& s : t.e_type) {
    json x = json::array();
    for (const auto& a : s) x.push_back(a.str());
    e.push_back(x);
  }
  for (bool b : t.complete) c.push_back(b);
  return {{"l_type", l}, {"e_type", e}, {"complete", c}, {"valid_to", deg_str(t.valid_to)}};
}

std::string types_text(const TypeDescriptor& t) {
  std::ostringstream o;
  o << "l_type " << l_type_str(t.l_type) << '\n' << "e_type " << e_type_str(t.e_type) << '\n';
  for (std::size_t s = 0; s < t.complete.size(); ++s) {
    o << "slot " << s + 1 << ": ";
    if (t.complete[s])
      o << "complete\n";
    else
      o << "incomplete, known up to degree " << deg_str(t.valid_to) << '\n';
  }
  return o.str();
}

json diag_json(const std::vector<Diagnostic>& d) {
  json a = json::array();
  for (const auto& x : d) a.push_back({{"code", x.code}, {"slot", x.slot}, {"message", x.message}});
  return a;
}

std::string diag_text(const std::vector<Diagnostic>& d) {
  std::string s;
  for (const auto& x : d) s += "diagnostic [" + x.code + "] " + x.message + "\n";
  return s;
}

json system_json(const LowerTriangularSystem& s) {
  json f = json::array();
  for (const auto& fi : s.f) f.push_back(fi.str(s.names));
  return {{"n", s.n()}, {"vars", s.names}, {"f", f}, {"g", s.g.str(s.names)}};
}

std::string system_text(const LowerTriangularSystem& s) {
  std::string o;
  for (std::size_t i = 0; i < s.n(); ++i) o += s.names[i] + "' = " + s.f[i].str(s.names) + "\n";
  o += "input: " + s.g.str(s.names) + "\n";
  return o;
}

Report cmd_classify(const RunConfig& cfg) {
  Report r;
  SystemFile file = load_system_file(cfg.path);
  LowerTriangularSystem sys;
  try {
    sys = file.triangular();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto diags = validate(sys);
  r.data["diagnostics"] = diag_json(diags);
  if (!diags.empty()) {
    r.exit_code = 1;
    r.text = diag_text(diags);
    return r;
  }
  TypeDescriptor t = classify(sys);
  r.data["types"] = types_json(t);
  r.text = types_text(t);
  return r;
}

Report cmd_invariance(const RunConfig& cfg) {
  Report r;
  SystemFile file = load_system_file(cfg.path);
  LowerTriangularSystem sys = file.triangular();
  auto diags = validate(sys);
  r.data["diagnostics"] = diag_json(diags);
  if (!diags.empty()) {
    r.exit_code = 1;
    r.text = diag_text(diags);
    return r;
  }
  Degree d = degree_for(cfg, file);
  InvarianceReport rep = check_type_invariance(sys, cfg.trials, cfg.seed, d);
  json v = json::array();
  std::ostringstream o;
  for (const auto& x : rep.violations) {
    v.push_back({{"trial", x.trial}, {"map", x.map}, {"reason", x.reason}});
    o << "violation in trial " << x.trial << ": " << x.reason << "\n  map: " << x.map << '\n';
  }
  r.data["trials"] = rep.trials;
  r.data["seed"] = cfg.seed;
  r.data["degree"] = deg_str(rep.degree);
  r.data["partial_slots"] = rep.partial_slots;
  r.data["violations"] = v;
  r.data["invariant"] = rep.ok();
  if (rep.ok()) {
    o << "types invariant over " << rep.trials << " random unitriangular maps (seed " << cfg.seed << ")\n";
    if (rep.partial_slots) o << "some slots compared up to degree " << deg_str(rep.degree) << " only\n";
  }
  r.text = o.str();
  r.exit_code = rep.ok() ? 0 : 1;
  return r;
}

Report cmd_verify_transform(const RunConfig& cfg) {
  Report r;
  SystemFile file = load_system_file(cfg.path);
  if (!file.map) throw InputError("file has no 'map:' section");
  Degree d = degree_for(cfg, file);
  AffineSystem a = file.affine();
  AffineSystem out;
  try {
    out = transform_affine(a, *file.map, d);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out.names = file.map_names;
  r.data["diagnostics"] = json::array();
  ShapeCheck sc = as_lower_triangular(out);
  json f = json::array(), g = json::array();
  for (const auto& c : out.f.c) f.push_back(c.str(out.names));
  for (const auto& c : out.g.c) g.push_back(c.str(out.names));
  r.data["transformed"] = {{"vars", out.names}, {"f", f}, {"G", g}};
  if (!sc.sys) {
    std::string t;
    for (const auto& v : sc.violations) {
      r.data["diagnostics"].push_back({{"code", "shape"}, {"slot", 0}, {"message", v}});
      t += v + "\n";
    }
    r.text = t;
    r.exit_code = 1;
    return r;
  }
  auto diags = validate(*sc.sys);
  r.data["diagnostics"] = diag_json(diags);
  r.text = system_text(*sc.sys);
  r.data["system"] = system_json(*sc.sys);
  if (!diags.empty()) {
    r.text += diag_text(diags);
    r.exit_code = 1;
    return r;
  }
  TypeDescriptor t = classify(*sc.sys);
  r.data["types"] = types_json(t);
  r.text += types_text(t);
  return r;
}

// slot s holds proper (s+1)-indices
std::string idx(const MultiIndex& a, std::size_t slot) { return a.padded(std::max(slot + 1, a.proper_index())).str(); }

json probes_json(const std::vector<BracketProbe>& ps, std::size_t slot) {
  json a = json::array();
  for (const auto& p : ps)
    a.push_back({{"index", idx(p.index, slot)}, {"value", vec_str(p.value)}, {"member", p.member}});
  return a;
}

std::string probe_text(const BracketProbe& p, std::size_t slot) {
  return "    ad_Y^" + idx(p.index, slot) + " F(0) = " + vec_str(p.value) +
         (p.member ? "  in D(0)\n" : "  not in D(0)\n");
}

Report cmd_equiv(const RunConfig& cfg) {
  Report r;
  SystemFile file = load_system_file(cfg.path);
  AffineSystem sys = file.affine();
  std::ostringstream o;
  Fields g, x, y;
  try {
    g = cfg.auto_canonical ? canonical_witnesses(sys) : file.family('G');
    x = file.family('X');
    y = file.family('Y');
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (g.empty()) throw InputError("no witness fields G1..Gn given; pass --auto-canonical to build them");
  if (!cfg.auto_canonical && x.empty()) x = g;

  TriangularizabilityReport tr = check_triangularizable(sys, g, cfg.seed);
  std::string chain = cfg.auto_canonical ? "canonical" : "file";
  if (cfg.auto_canonical && tr.verdict == Verdict::inconclusive) {
    Fields alt = normalized_witnesses(sys);
    TriangularizabilityReport tr2 = check_triangularizable(sys, alt, cfg.seed);
    if (tr2.verdict != Verdict::inconclusive) {
      o << "canonical chain inconclusive at level " << tr.failing_level << "; using the normalized chain\n";
      tr = tr2;
      g = alt;
      chain = "normalized";
    }
  }
  if (cfg.auto_canonical && x.empty()) x = g;
  json levels = json::array();
  for (const auto& l : tr.levels)
    levels.push_back({{"level", l.level},
                      {"verdict", to_string(l.verdict)},
                      {"hat_rank", l.hat_rank},
                      {"witness_rank", l.witness_rank},
                      {"origin_rank", l.origin_rank},
                      {"note", l.note}});
  r.data["triangularizable"] = {{"verdict", to_string(tr.verdict)},
                                {"failing_level", tr.failing_level},
                                {"levels", levels},
                                {"witnesses", chain}};
  json diags = json::array();
  for (const auto& d : tr.diagnostics) {
    diags.push_back({{"code", "precondition"}, {"slot", 0}, {"message", d}});
    o << "diagnostic [precondition] " << d << '\n';
  }
  r.data["diagnostics"] = diags;

  if (tr.verdict == Verdict::fail) {
    o << "not lower-triangularizable at level " << tr.failing_level;
    for (const auto& l : tr.levels)
      if (l.level == tr.failing_level && !l.note.empty()) o << ": " << l.note;
    o << '\n';
    r.data["verdict"] = "not equivalent";
    r.text = o.str();
    r.exit_code = 1;
    return r;
  }
  if (tr.verdict == Verdict::inconclusive) {
    o << "inconclusive at level " << tr.failing_level;
    for (const auto& l : tr.levels)
      if (l.level == tr.failing_level && !l.note.empty()) o << ": " << l.note;
    o << '\n';
    r.data["verdict"] = "inconclusive";
    r.text = o.str();
    r.exit_code = 1;
    return r;
  }
  o << "lower-triangularizable (all " << tr.levels.size() << " levels pass)\n";

  bool solved = false;
  if (y.empty()) {
    YSolve ys = solve_y_fields(x, cfg.ansatz_deg, cfg.seed);
    r.data["y_solve"] = {{"sat", ys.sat}, {"degree", ys.degree}};
    if (!ys.sat) {
      o << "no Y fields with polynomial coefficients of degree <= " << cfg.ansatz_deg
        << "; type not determined (try a larger --ansatz-deg)\n";
      r.data["verdict"] = "equivalent; type undetermined";
      r.text = o.str();
      r.exit_code = 1;
      return r;
    }
    y = ys.y;
    solved = true;
  }
  YCheck yc = verify_y_fields(x, y, cfg.seed);
  r.data["y_check"] = {{"ok", yc.ok}, {"failures", yc.failures}, {"solved", solved}};
  if (!yc.ok) {
    for (const auto& f : yc.failures) o << "Y fields rejected: " << f << '\n';
    r.data["verdict"] = "equivalent; Y fields invalid";
    r.text = o.str();
    r.exit_code = 1;
    return r;
  }
  if (solved) {
    json ys = json::array();
    for (const auto& v : y) {
      json c = json::array();
      for (const auto& e : v.c) c.push_back(e.str(sys.names));
      ys.push_back(c);
    }
    r.data["y_fields"] = ys;
    o << "Y fields solved with ansatz degree " << cfg.ansatz_deg << '\n';
  }

  BracketContext ctx{sys.f, x, y};
  bool refuted = false, open = false;
  json slots = json::array();
  std::optional<unsigned> bound;
  if (cfg.deg) bound = static_cast<unsigned>(*cfg.deg);
  auto add_verdicts = [&](const std::vector<SlotVerdict>& vs, const char* kind) {
    for (const auto& v : vs) {
      json s = {{"kind", kind},
                {"slot", v.slot},
                {"status", to_string(v.status)},
                {"bound", v.bound},
                {"note", v.note},
                {"probes", probes_json(v.probes, v.slot)},
                {"nodes_visited", v.nodes_visited}};
      if (v.offending) s["offending"] = idx(*v.offending, v.slot);
      slots.push_back(s);
      o << "  " << kind << " slot " << v.slot << ": " << to_string(v.status);
      if (v.status == SlotStatus::confirmed_up_to) o << " (order <= " << v.bound << ")";
      if (v.offending) o << " at " << idx(*v.offending, v.slot);
      if (!v.note.empty()) o << " - " << v.note;
      o << '\n';
      for (const auto& p : v.probes) o << probe_text(p, v.slot);
      if (v.status == SlotStatus::refuted) refuted = true;
      if (v.status == SlotStatus::bound_required) open = true;
    }
  };
  bool have_candidate = file.candidate_l || file.candidate_e;
  try {
    if (file.candidate_l) add_verdicts(bracket_l_type(ctx, *file.candidate_l, bound.value_or(kDefaultDegree)), "l");
    if (file.candidate_e) add_verdicts(bracket_e_type(ctx, *file.candidate_e, bound), "e");
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  r.data["slots"] = slots;

  if (!have_candidate) {
    unsigned b = bound.value_or(static_cast<unsigned>(degree_for(cfg, file)));
    json found = json::array();
    std::vector<IndexSet> e;
    std::vector<MultiIndex> l;
    bool all_complete = true;
    for (std::size_t s = 1; s < sys.n(); ++s) {
      DiscoveredSlot ds = discover_e_slot(ctx, s, b);
      IndexSet es;
      for (const auto& a : ds.e) es.insert(a.padded(s + 1));
      e.push_back(es);
      l.push_back(ds.least.padded(s + 1));
      all_complete = all_complete && ds.complete;
      found.push_back({{"slot", s},
                       {"e", json::array()},
                       {"least", idx(ds.least, s)},
                       {"complete", ds.complete},
                       {"bound", ds.bound},
                       {"probes", probes_json(ds.probes, s)}});
      for (const auto& a : es) found.back()["e"].push_back(a.str());
    }
    r.data["discovered"] = found;
    o << "bracket-derived l_type " << l_type_str(l) << '\n' << "bracket-derived e_type " << e_type_str(e) << '\n';
    if (!all_complete) o << "some slots determined only up to order " << b << '\n';
    r.data["verdict"] = all_complete ? "equivalent; type determined" : "equivalent; type determined up to bound";
    r.text = o.str();
    r.exit_code = diags.empty() ? 0 : 1;
    return r;
  }

  std::string verdict;
  if (refuted)
    verdict = "equivalent; type refuted";
  else if (open)
    verdict = "equivalent; type confirmation needs a bound (pass --deg)";
  else
    verdict = "equivalent; type confirmed";
  o << verdict << '\n';
  r.data["verdict"] = verdict;
  r.text = o.str();
  r.exit_code = (!refuted && !open && diags.empty()) ? 0 : 1;
  return r;
}

Report cmd_eliminate(const RunConfig& cfg) {
  Report r;
  std::vector<std::string> vars;
  std::string names = cfg.vars;
  std::replace(names.begin(), names.end(), ',', ' ');
  std::istringstream vs(names);
  for (std::string v; vs >> v;) vars.push_back(v);
  if (vars.empty()) throw InputError("--vars is required");
  if (cfg.poly.empty() || cfg.index.empty()) throw InputError("--poly and --index are required");
  Jet<Rational> p;
  MultiIndex alpha;
  try {
    p = parse_jet(cfg.poly, vars);
  } catch (const ParseError& e) {
    throw InputError(std::string("--poly: ") + e.what());
  }
  try {
    alpha = parse_multiindex(cfg.index);
  } catch (const std::exception& e) {
    throw InputError(std::string("--index: ") + e.what());
  }
  std::vector<std::string> out_names;
  for (std::size_t k = 1; k <= vars.size(); ++k) out_names.push_back("y" + std::to_string(k));
  r.data["index"] = alpha.str();
  try {
    EliminationResult e = eliminate_index(p, alpha, cfg.seed);
    json m = json::array();
    std::ostringstream o;
    o << "eliminated " << alpha.str() << " via " << e.method << (e.real ? " (real map)" : " (complex map)") << '\n';
    for (std::size_t i = 0; i < e.map.size(); ++i) {
      std::string c = e.map.comps[i].str(out_names);
      m.push_back(c);
      o << "  " << vars[i] << " = " << c << '\n';
    }
    r.data["map"] = m;
    r.data["real"] = e.real;
    r.data["method"] = e.method;
    r.data["target_coeff"] = ScalarTraits<Complex>::str(e.target_coeff);
    r.data["target_abs"] = std::abs(e.target_coeff);
    r.data["max_coeff"] = e.max_coeff;
    if (e.exact_map) {
      json x = json::array();
      for (const auto& c : e.exact_map->comps) x.push_back(c.str(out_names));
      r.data["exact_map"] = x;
      o << "exact rational map; coefficient of y^" << alpha.str() << " is exactly 0\n";
    } else {
      o << "|coefficient of y^" << alpha.str() << "| = " << format_double(std::abs(e.target_coeff))
        << " (max coefficient " << format_double(e.max_coeff) << ")\n";
    }
    r.data["diagnostics"] = json::array();
    r.text = o.str();
  } catch (const EliminationError& e) {
    r.data["diagnostics"] = json::array({{{"code", "eliminate"}, {"slot", 0}, {"message", e.what()}}});
    r.text = std::string("cannot eliminate: ") + e.what() + "\n";
    r.exit_code = 1;
  }
  return r;
}

}  // namespace

Report run_command(const RunConfig& cfg) {
  Report r;
  try {
    if (cfg.command == "classify")
      r = cmd_classify(cfg);
    else if (cfg.command == "equiv")
      r = cmd_equiv(cfg);
    else if (cfg.command == "verify-transform")
      r = cmd_verify_transform(cfg);
    else if (cfg.command == "invariance")
      r = cmd_invariance(cfg);
    else if (cfg.command == "eliminate")
      r = cmd_eliminate(cfg);
    else
      throw InputError("unknown command " + cfg.command);
  } catch (const FileError& e) {
    r = {};
    r.exit_code = 2;
    r.data["diagnostics"] = json::array(
        {{{"code", "parse"}, {"slot", 0}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}}});
    r.text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    r = {};
    r.exit_code = 2;
    r.data["diagnostics"] = json::array({{{"code", "error"}, {"slot", 0}, {"message", e.what()}}});
    r.text = std::string("error: ") + e.what() + "\n";
  }
  r.data["command"] = cfg.command;
  r.data["exit_code"] = r.exit_code;
  return r;
}

}  // namespace trilin
