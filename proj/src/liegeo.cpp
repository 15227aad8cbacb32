#include "trilin/liegeo.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "trilin/polymatrix.hpp"

namespace trilin {

namespace {

constexpr int kSamplePoints = 20;

PolyMat rows_of(const Fields& gens) {
  PolyMat m;
  for (const auto& g : gens) m.push_back(g.c);
  return m;
}

void require_exact(const Fields& gens, const char* what) {
  for (const auto& g : gens)
    if (!g.exact()) throw std::invalid_argument(std::string(what) + " needs exact polynomial fields");
}

std::size_t dim_of(const Fields& gens) {
  std::size_t n = 0;
  for (const auto& g : gens) n = std::max(n, g.n());
  return n;
}

std::vector<RatVec> sample_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  std::vector<RatVec> pts;
  for (int s = 0; s < kSamplePoints; ++s) {
    RatVec p;
    for (std::size_t i = 0; i < n; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      p.push_back(q);
    }
    pts.push_back(p);
  }
  return pts;
}

RatMat eval_rows(const Fields& gens, const RatVec& p) {
  RatMat m;
  for (const auto& g : gens) m.push_back(g.at(p));
  return m;
}

}  // namespace

std::size_t rank_at_origin(const Fields& gens) {
  RatMat m;
  for (const auto& g : gens) m.push_back(g.at_origin());
  return rank(m);
}

bool membership_at_origin(const VectorField& v, const Fields& gens) {
  RatMat m;
  for (const auto& g : gens) m.push_back(g.at_origin());
  return in_row_span(m, v.at_origin());
}

std::size_t generic_rank(const Fields& gens, std::uint64_t seed) {
  if (gens.empty()) return 0;
  require_exact(gens, "generic rank");
  std::size_t r = generic_rank(rows_of(gens));
  std::size_t best = 0;
  for (const auto& p : sample_points(dim_of(gens), seed)) {
    std::size_t rs = rank(eval_rows(gens, p));
    if (rs > r) throw std::logic_error("internal error: sampled rank exceeds symbolic rank");
    best = std::max(best, rs);
  }
  if (best != r) throw std::logic_error("internal error: symbolic rank never attained at sample points");
  return r;
}

bool generic_membership(const VectorField& v, const Fields& gens, std::uint64_t seed) {
  require_exact(gens, "generic membership");
  require_exact({v}, "generic membership");
  if (gens.empty()) return v.is_zero();
  std::size_t r0 = generic_rank(rows_of(gens));
  Fields all = gens;
  all.push_back(v);
  std::size_t r1 = generic_rank(rows_of(all));
  bool member = r1 == r0;
  int counted = 0;
  for (const auto& p : sample_points(dim_of(all), seed)) {
    RatMat g = eval_rows(gens, p);
    if (rank(g) != r0) continue;
    ++counted;
    bool sm = in_row_span(g, v.at(p));
    if (sm != member) throw std::logic_error("internal error: symbolic and sampled membership disagree");
  }
  if (counted == 0) throw std::logic_error("internal error: no sample point attains the generic rank");
  return member;
}

bool involutive(const Fields& gens, std::uint64_t seed) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!generic_membership(lie_bracket(gens[a], gens[b]), gens, seed)) return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

Fields canonical_witnesses(const AffineSystem& sys) {
  std::size_t n = sys.n();
  Fields w(n);
  w[n - 1] = sys.g;
  for (std::size_t i = n - 1; i >= 1; --i) w[i - 1] = lie_bracket(w[i], sys.f);
  return w;
}

namespace {

// divides out a polynomial factor shared by all components, if one of the
// components is that factor
VectorField primitive(VectorField v) {
  for (bool again = true; again;) {
    again = false;
    for (const auto& c : v.c) {
      if (c.empty() || c.degree() == 0) continue;
      VectorField q = VectorField::zero(v.n());
      bool ok = true;
      for (std::size_t k = 0; k < v.n() && ok; ++k) {
        try {
          q.c[k] = exact_divide(v.c[k], c);
        } catch (const std::domain_error&) {
          ok = false;
        }
      }
      if (ok) {
        v = q;
        again = true;
        break;
      }
    }
  }
  return v;
}

}  // namespace

Fields normalized_witnesses(const AffineSystem& sys) {
  std::size_t n = sys.n();
  Fields w(n);
  // reduced copies with a unit constant at their pivot coordinate
  std::vector<std::pair<std::size_t, VectorField>> basis;
  auto reduce = [&](VectorField v) {
    for (const auto& [p, b] : basis)
      if (!v.c[p].empty()) v -= v.c[p] * b;
    return v;
  };
  auto add_pivot = [&](const VectorField& v) {
    VectorField r = reduce(v);
    for (std::size_t k = n; k-- > 0;)
      if (!r.c[k].empty() && r.c[k].degree() == 0) {
        Rational s = 1 / r.c[k].constant_term();
        basis.emplace_back(k, s * r);
        return;
      }
  };
  w[n - 1] = primitive(sys.g);
  add_pivot(w[n - 1]);
  for (std::size_t i = n - 1; i >= 1; --i) {
    w[i - 1] = primitive(reduce(lie_bracket(w[i], sys.f)));
    add_pivot(w[i - 1]);
  }
  return w;
}

TriangularizabilityReport check_triangularizable(const AffineSystem& sys, const Fields& w, std::uint64_t seed) {
  std::size_t n = sys.n();
  if (w.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " witness fields G^1..G^n, got " +
                                std::to_string(w.size()));
  require_exact({sys.f, sys.g}, "triangularizability check");
  require_exact(w, "triangularizability check");
  TriangularizabilityReport rep;
  for (const auto& x : sys.f.at_origin())
    if (sgn(x) != 0) {
      rep.diagnostics.push_back("drift does not vanish at 0");
      break;
    }
  bool g0 = false;
  for (const auto& x : sys.g.at_origin()) g0 = g0 || sgn(x) != 0;
  if (!g0) rep.diagnostics.push_back("input field vanishes at 0");
  if (!rep.diagnostics.empty()) {
    rep.verdict = Verdict::fail;
    rep.failing_level = n;
    return rep;
  }

  auto finish = [&](LevelCheck lc) {
    rep.levels.push_back(lc);
    if (lc.verdict != Verdict::pass && rep.verdict == Verdict::pass) {
      rep.verdict = lc.verdict;
      rep.failing_level = lc.level;
    }
    return lc.verdict == Verdict::pass;
  };

  {
    LevelCheck lc;
    lc.level = n;
    lc.hat_rank = generic_rank(Fields{sys.g}, seed);
    lc.witness_rank = generic_rank(Fields{w[n - 1]}, seed);
    lc.origin_rank = rank_at_origin({w[n - 1]});
    if (lc.witness_rank != 1 || generic_rank(Fields{sys.g, w[n - 1]}, seed) != 1) {
      lc.verdict = Verdict::inconclusive;
      lc.note = "G^" + std::to_string(n) + " does not span span{G}; choose different G^" + std::to_string(n);
    } else if (lc.origin_rank != 1) {
      lc.verdict = Verdict::inconclusive;
      lc.note = "G^" + std::to_string(n) + " vanishes at 0; choose different G^" + std::to_string(n);
    }
    if (!finish(lc)) return rep;
  }
  for (std::size_t i = n - 1; i >= 1; --i) {
    LevelCheck lc;
    lc.level = i;
    std::size_t target = n - i + 1;
    Fields above(w.begin() + static_cast<long>(i), w.end());
    VectorField v = lie_bracket(w[i], sys.f);
    Fields hat = above;
    hat.push_back(v);
    lc.hat_rank = generic_rank(hat, seed);
    Fields di(w.begin() + static_cast<long>(i) - 1, w.end());
    lc.witness_rank = generic_rank(di, seed);
    if (lc.hat_rank < target) {
      lc.verdict = Verdict::fail;
      lc.note = "bracket-built distribution has generic dimension " + std::to_string(lc.hat_rank) + " < " +
                std::to_string(target);
      finish(lc);
      return rep;
    }
    bool matches = lc.witness_rank == target && generic_membership(v, di, seed);
    if (!matches) {
      if (!involutive(hat, seed)) {
        lc.verdict = Verdict::fail;
        lc.note = "bracket-built distribution is not involutive";
      } else {
        lc.verdict = Verdict::inconclusive;
        lc.note = "witness span differs from the bracket-built distribution; choose different G^" + std::to_string(i);
      }
      finish(lc);
      return rep;
    }
    // pairs inside D^{i+1} were settled at the previous level
    bool inv = true;
    for (std::size_t b = 1; b < di.size() && inv; ++b)
      inv = generic_membership(lie_bracket(di[0], di[b]), di, seed);
    if (!inv) {
      lc.verdict = Verdict::fail;
      lc.note = "D^" + std::to_string(i) + " is not involutive";
      finish(lc);
      return rep;
    }
    lc.origin_rank = rank_at_origin(di);
    if (lc.origin_rank != target) {
      lc.verdict = Verdict::inconclusive;
      lc.note = "witness span is singular at 0; choose different G^" + std::to_string(i);
      finish(lc);
      return rep;
    }
    finish(lc);
  }
  return rep;
}

YCheck verify_y_fields(const Fields& x, const Fields& y, std::uint64_t seed) {
  YCheck r;
  std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("expected as many Y fields as X fields");
  for (std::size_t k = 1; k <= n; ++k) {
    Fields dk(x.begin() + static_cast<long>(k) - 1, x.end());
    Fields yk(y.begin() + static_cast<long>(k) - 1, y.end());
    std::size_t target = n - k + 1;
    if (generic_rank(yk, seed) != target)
      r.failures.push_back("span{Y^" + std::to_string(k) + "..Y^n} has generic rank below " + std::to_string(target));
    for (std::size_t j = k; j <= n; ++j)
      if (!generic_membership(y[j - 1], dk, seed))
        r.failures.push_back("Y^" + std::to_string(j) + " not in D^" + std::to_string(k));
    Fields next(x.begin() + static_cast<long>(k), x.end());
    bool in_next = next.empty() ? [&] {
      for (const auto& q : y[k - 1].at_origin())
        if (sgn(q) != 0) return false;
      return true;
    }()
                                : membership_at_origin(y[k - 1], next);
    if (in_next) r.failures.push_back("Y^" + std::to_string(k) + "(0) lies in D^" + std::to_string(k + 1) + "(0)");
  }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) {
      Fields dl(x.begin() + static_cast<long>(l) - 1, x.end());
      if (!generic_membership(lie_bracket(x[l - 1], y[k - 1]), dl, seed))
        r.failures.push_back("[X^" + std::to_string(l) + ",Y^" + std::to_string(k) + "] not in D^" +
                             std::to_string(l));
    }
  r.ok = r.failures.empty();
  return r;
}

namespace {

std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out{MultiIndex(n)};
  for (std::size_t i = 1; i <= n; ++i)
    for (const auto& a : proper_indices_up_to(i, d)) out.push_back(a.padded(n));
  return out;
}

}  // namespace

YSolve solve_y_fields(const Fields& x, unsigned deg, std::uint64_t seed) {
  std::size_t n = x.size();
  require_exact(x, "Y-field solving");
  YSolve res;
  res.degree = deg;
  PolyMat m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = x[k].c[i];
  if (generic_rank(m) != n) throw std::invalid_argument("X fields are not generically independent");
  PolyMat adj = adjugate(m);
  auto monos = monomials_up_to(n, deg);
  // coordinates (up to the common factor det) of v in the X frame
  auto coords = [&](const VectorField& v, std::size_t row) {
    Poly s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!adj[row][i].empty() && !v.c[i].empty()) s += adj[row][i] * v.c[i];
    return s;
  };
  Fields y(n);
  y[n - 1] = x[n - 1];
  for (std::size_t j = 1; j < n; ++j) {
    struct Unk {
      std::size_t k;
      MultiIndex mu;
    };
    std::vector<Unk> unks;
    for (std::size_t k = j; k < n; ++k)
      for (const auto& mu : monos)
        if (!(k == j && mu.is_zero())) unks.push_back({k, mu});
    // equation key: (l, row, monomial)
    std::map<std::tuple<std::size_t, std::size_t, MultiIndex>, std::size_t> eq;
    std::vector<std::map<std::size_t, Rational>> cols(unks.size() + 1);
    auto add = [&](std::size_t col, const VectorField& field) {
      for (std::size_t l = j + 1; l <= n; ++l) {
        VectorField b = lie_bracket(x[l - 1], field);
        for (std::size_t row = j; row < l; ++row) {
          Poly c = coords(b, row - 1);
          for (const auto& [a, q] : c.terms()) {
            auto key = std::make_tuple(l, row, a);
            auto it = eq.find(key);
            std::size_t e = it == eq.end() ? eq.emplace(key, eq.size()).first->second : it->second;
            cols[col][e] += q;
          }
        }
      }
    };
    for (std::size_t u = 0; u < unks.size(); ++u)
      add(u, Poly::monomial(n, unks[u].mu, Rational(1)) * x[unks[u].k - 1]);
    add(unks.size(), x[j - 1]);
    RatMat a(eq.size(), RatVec(unks.size()));
    RatVec b(eq.size());
    for (std::size_t u = 0; u < unks.size(); ++u)
      for (const auto& [e, q] : cols[u]) a[e][u] = q;
    for (const auto& [e, q] : cols[unks.size()]) b[e] = -q;
    auto sol = eq.empty() ? std::optional<RatVec>(RatVec(unks.size())) : solve(a, b);
    if (!sol) return res;
    VectorField yj = x[j - 1];
    for (std::size_t u = 0; u < unks.size(); ++u)
      if (sgn((*sol)[u]) != 0) yj += Poly::monomial(n, unks[u].mu, (*sol)[u]) * x[unks[u].k - 1];
    y[j - 1] = yj;
  }
  YCheck chk = verify_y_fields(x, y, seed);
  if (!chk.ok) throw std::logic_error("internal error: solved Y fields fail verification: " + chk.failures.front());
  res.sat = true;
  res.y = y;
  return res;
}

const char* to_string(SlotStatus s) {
  switch (s) {
    case SlotStatus::confirmed: return "confirmed";
    case SlotStatus::confirmed_up_to: return "confirmed up to degree";
    case SlotStatus::refuted: return "refuted";
    default: return "infinite complement, bound required";
  }
}

namespace {

struct SlotFrame {
  std::size_t k;  // proper index of the multi-indices examined
  RatMat origin;  // D^k(0) generators
};

SlotFrame frame_for(const BracketContext& ctx, std::size_t slot) {
  std::size_t n = ctx.f.n();
  if (slot < 1 || slot >= n) throw std::invalid_argument("slot out of range");
  if (ctx.x.size() != n || ctx.y.size() != n) throw std::invalid_argument("bracket checks need n X and n Y fields");
  SlotFrame fr;
  fr.k = slot + 1;
  for (std::size_t l = fr.k; l <= n; ++l) fr.origin.push_back(ctx.x[l - 1].at_origin());
  return fr;
}

BracketProbe probe(const SlotFrame& fr, const MultiIndex& a, const VectorField& field) {
  BracketProbe p;
  p.index = a;
  p.value = field.at_origin();
  p.member = in_row_span(fr.origin, p.value);
  return p;
}

BracketProbe probe_direct(const BracketContext& ctx, const SlotFrame& fr, const MultiIndex& a) {
  VectorField f = ctx.f.truncated(a.order());
  return probe(fr, a, ad_multi(ctx.y, a, f));
}

unsigned cap_bound(const BracketContext& ctx, unsigned bound) {
  Degree v = ctx.f.valid_to();
  for (const auto& y : ctx.y) v = std::min(v, deg_add(y.valid_to(), 1));
  if (v != kExact && static_cast<Degree>(bound) > v) return static_cast<unsigned>(std::max<Degree>(v, 0));
  return bound;
}

struct WalkOutcome {
  std::vector<MultiIndex> cut;  // children beyond the bound
  std::size_t visited = 0;
  bool stopped = false;
};

// Breadth-first by order, lex order within an order. visit returns
// 0 = stop walk, 1 = do not expand, 2 = expand.
template <class Visit, class Prune>
WalkOutcome walk(const BracketContext& ctx, const SlotFrame& fr, unsigned bound, Visit visit, Prune prune) {
  struct Node {
    MultiIndex a;
    std::size_t left;
    VectorField field;
  };
  WalkOutcome out;
  std::size_t n = ctx.f.n();
  auto shrink = [&](VectorField v, unsigned order) {
    if (v.term_count() > ctx.exact_term_limit && bound >= order) v = v.truncated(bound - order);
    return v;
  };
  std::vector<Node> level;
  MultiIndex root = MultiIndex::lambda(fr.k).padded(n);
  if (bound >= 1 && !prune(root)) level.push_back({root, fr.k, shrink(lie_bracket(ctx.y[fr.k - 1], ctx.f), 1)});
  for (unsigned order = 1; order <= bound && !level.empty(); ++order) {
    std::sort(level.begin(), level.end(), [](const Node& p, const Node& q) { return lex_less(p.a, q.a); });
    std::vector<Node> next;
    for (auto& node : level) {
      ++out.visited;
      int act = visit(node.a, node.field);
      if (act == 0) {
        out.stopped = true;
        return out;
      }
      if (act == 1) continue;
      if (node.field.exact() && node.field.is_zero()) continue;
      for (std::size_t l = 1; l <= node.left; ++l) {
        MultiIndex c = node.a;
        c.add(l, 1);
        if (prune(c)) continue;
        if (order == bound) {
          out.cut.push_back(c);
          continue;
        }
        next.push_back({c, l, shrink(lie_bracket(ctx.y[l - 1], node.field), order + 1)});
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

SlotVerdict bracket_l_slot(const BracketContext& ctx, std::size_t slot, const MultiIndex& cand, unsigned bound) {
  SlotFrame fr = frame_for(ctx, slot);
  SlotVerdict sv;
  sv.slot = slot;
  if (cand.proper_index() != fr.k) {
    sv.status = SlotStatus::refuted;
    sv.offending = cand;
    sv.note = "candidate " + cand.str() + " is not a proper " + std::to_string(fr.k) + "-index";
    return sv;
  }
  bound = cap_bound(ctx, bound);
  BracketProbe top = probe_direct(ctx, fr, cand);
  sv.probes.push_back(top);
  if (top.member) {
    sv.status = SlotStatus::refuted;
    sv.offending = cand;
    sv.note = "bracket at the candidate lies in D^" + std::to_string(fr.k) + "(0)";
    return sv;
  }
  auto res = walk(
      ctx, fr, bound,
      [&](const MultiIndex& a, const VectorField& field) {
        BracketProbe p = probe(fr, a, field);
        if (!p.member) {
          sv.probes.push_back(p);
          sv.status = SlotStatus::refuted;
          sv.offending = a;
          sv.note = "lex-smaller index " + a.str() + " has bracket outside D^" + std::to_string(fr.k) + "(0)";
          return 0;
        }
        return 2;
      },
      [&](const MultiIndex& a) { return !lex_less(a, cand); });
  sv.nodes_visited = res.visited;
  if (res.stopped) return sv;
  if (!res.cut.empty()) {
    sv.status = SlotStatus::confirmed_up_to;
    sv.bound = bound;
  }
  return sv;
}

SlotVerdict bracket_e_slot(const BracketContext& ctx, std::size_t slot, const IndexSet& cand,
                           std::optional<unsigned> bound) {
  SlotFrame fr = frame_for(ctx, slot);
  SlotVerdict sv;
  sv.slot = slot;
  IndexSet e;
  for (const auto& a : cand) {
    if (a.proper_index() != fr.k) {
      sv.status = SlotStatus::refuted;
      sv.offending = a;
      sv.note = "candidate " + a.str() + " is not a proper " + std::to_string(fr.k) + "-index";
      return sv;
    }
    e.insert(a.padded(ctx.f.n()));
  }
  for (const auto& a : e)
    for (const auto& b : e)
      if (strictly_generates(a, b)) {
        sv.status = SlotStatus::refuted;
        sv.offending = b;
        sv.note = "candidate set is not an antichain: " + a.str() + " generates " + b.str();
        return sv;
      }
  for (const auto& a : e) {
    BracketProbe p = probe_direct(ctx, fr, a);
    sv.probes.push_back(p);
    if (p.member) {
      sv.status = SlotStatus::refuted;
      sv.offending = a;
      sv.note = "bracket at candidate " + a.str() + " lies in D^" + std::to_string(fr.k) + "(0)";
      return sv;
    }
  }
  ComplementResult comp = complement_of_generated(e, fr.k);
  if (comp.finite) {
    for (const auto& z : comp.elements) {
      BracketProbe p = probe_direct(ctx, fr, z.padded(ctx.f.n()));
      sv.probes.push_back(p);
      if (!p.member) {
        sv.status = SlotStatus::refuted;
        sv.offending = z;
        sv.note = "index " + z.str() + " outside the generated set has bracket outside D^" + std::to_string(fr.k) +
                  "(0)";
        return sv;
      }
    }
    return sv;
  }
  constexpr unsigned kAutoCap = 12;
  unsigned b = cap_bound(ctx, bound.value_or(kAutoCap));
  auto res = walk(
      ctx, fr, b,
      [&](const MultiIndex& a, const VectorField& field) {
        BracketProbe p = probe(fr, a, field);
        if (!p.member) {
          sv.probes.push_back(p);
          sv.status = SlotStatus::refuted;
          sv.offending = a;
          sv.note = "index " + a.str() + " outside the generated set has bracket outside D^" +
                    std::to_string(fr.k) + "(0)";
          return 0;
        }
        return 2;
      },
      [&](const MultiIndex& a) { return in_generated(e, a); });
  sv.nodes_visited = res.visited;
  if (res.stopped) return sv;
  if (!res.cut.empty()) {
    if (bound) {
      sv.status = SlotStatus::confirmed_up_to;
      sv.bound = b;
    } else {
      sv.status = SlotStatus::bound_required;
      sv.note = "infinite complement, bound required";
    }
  }
  return sv;
}

std::vector<SlotVerdict> bracket_l_type(const BracketContext& ctx, const std::vector<MultiIndex>& cand,
                                        unsigned bound) {
  if (cand.size() + 1 != ctx.f.n()) throw std::invalid_argument("L-type candidate needs n-1 entries");
  std::vector<SlotVerdict> r;
  for (std::size_t s = 1; s <= cand.size(); ++s) r.push_back(bracket_l_slot(ctx, s, cand[s - 1], bound));
  return r;
}

std::vector<SlotVerdict> bracket_e_type(const BracketContext& ctx, const std::vector<IndexSet>& cand,
                                        std::optional<unsigned> bound) {
  if (cand.size() + 1 != ctx.f.n()) throw std::invalid_argument("E-type candidate needs n-1 entries");
  std::vector<SlotVerdict> r;
  for (std::size_t s = 1; s <= cand.size(); ++s) r.push_back(bracket_e_slot(ctx, s, cand[s - 1], bound));
  return r;
}

DiscoveredSlot discover_e_slot(const BracketContext& ctx, std::size_t slot, unsigned bound) {
  SlotFrame fr = frame_for(ctx, slot);
  DiscoveredSlot ds;
  ds.slot = slot;
  ds.bound = cap_bound(ctx, bound);
  auto res = walk(
      ctx, fr, ds.bound,
      [&](const MultiIndex& a, const VectorField& field) {
        if (in_generated(ds.e, a)) return 1;
        BracketProbe p = probe(fr, a, field);
        if (!p.member) {
          ds.e.insert(a);
          ds.probes.push_back(p);
          return 1;
        }
        return 2;
      },
      [&](const MultiIndex& a) { return in_generated(ds.e, a); });
  ds.complete = true;
  for (const auto& c : res.cut)
    if (!in_generated(ds.e, c)) ds.complete = false;
  if (!ds.e.empty()) ds.least = *ds.e.begin();
  return ds;
}

}  // namespace trilin
