#include "trilin/indexsets.hpp"

#include <stdexcept>

namespace trilin {

std::string to_string(const IndexSet& s) {
  std::string r = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) r += ',';
    r += a.str();
    first = false;
  }
  return r + "}";
}

IndexSet parse_index_set(std::string_view text) {
  IndexSet s;
  std::size_t i = text.find_first_not_of(" \t");
  std::size_t j = text.find_last_not_of(" \t");
  if (i == std::string_view::npos || text[i] != '{' || text[j] != '}')
    throw std::invalid_argument("malformed index set: " + std::string(text));
  std::string_view body = text.substr(i + 1, j - i - 1);
  std::size_t pos = 0;
  while (true) {
    std::size_t open = body.find('(', pos);
    if (open == std::string_view::npos) break;
    std::size_t close = body.find(')', open);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced index set");
    s.insert(parse_multiindex(body.substr(open, close - open + 1)));
    pos = close + 1;
  }
  return s;
}

bool all_proper(const IndexSet& s, std::size_t i) {
  for (const auto& a : s)
    if (a.proper_index() != i) return false;
  return true;
}

IndexSet proper_part(const IndexSet& s, std::size_t i) {
  IndexSet r;
  for (const auto& a : s)
    if (a.proper_index() == i) r.insert(a);
  return r;
}

MultiIndex least(const IndexSet& s, std::size_t i) {
  if (s.empty()) throw std::invalid_argument("least of empty index set");
  if (!all_proper(s, i))
    throw std::invalid_argument("mixed properness: not all elements are proper " + std::to_string(i) +
                                "-indices");
  return *s.begin();
}

bool in_generated(const IndexSet& s, const MultiIndex& b) {
  for (const auto& a : s)
    if (generates(a, b)) return true;
  return false;
}

IndexSet weakly_essential_alg1(const IndexSet& s, std::size_t i) {
  IndexSet w;
  for (const auto& a : proper_part(s, i)) {
    // lex order visits candidates in the order the algorithm picks them
    if (!in_generated(w, a)) w.insert(a);
  }
  return w;
}

IndexSet weakly_essential_alg2(const IndexSet& s, std::size_t i) {
  IndexSet rest = proper_part(s, i);
  IndexSet w;
  while (!rest.empty()) {
    IndexSet picked;
    for (std::size_t k = 1; k <= i; ++k) {
      unsigned best = ~0u;
      for (const auto& a : rest) best = std::min(best, a.prefix_sum(k));
      for (const auto& a : rest) {
        if (a.prefix_sum(k) == best) {
          picked.insert(a);  // lex-least among the minimizers
          break;
        }
      }
    }
    for (const auto& a : picked) w.insert(a);
    for (auto it = rest.begin(); it != rest.end();) {
      if (in_generated(w, *it))
        it = rest.erase(it);
      else
        ++it;
    }
  }
  return w;
}

std::vector<IndexSet> essential_sets(const std::vector<IndexSet>& w) {
  std::vector<IndexSet> e(w.size());
  IndexSet above;
  for (std::size_t i = w.size(); i-- > 0;) {
    for (const auto& a : w[i])
      if (!in_generated(above, a)) e[i].insert(a);
    above.insert(w[i].begin(), w[i].end());
  }
  return e;
}

std::optional<unsigned> lambda_bound(const IndexSet& s, std::size_t i) {
  // only lambda^{i,k'} generates lambda^{i,k}, and then k' <= k
  std::optional<unsigned> k;
  for (const auto& a : s) {
    if (a.proper_index() == i && a.order() == a[i]) {
      if (!k || a[i] < *k) k = a[i];
    }
  }
  return k;
}

static void enumerate(std::size_t pos, std::size_t i, unsigned left, MultiIndex& cur,
                      std::vector<MultiIndex>& out) {
  if (pos == i) {
    for (unsigned v = 1; v <= left; ++v) {
      cur.set(i, v);
      out.push_back(cur);
    }
    cur.set(i, 0);
    return;
  }
  for (unsigned v = 0; v + 1 <= left; ++v) {
    cur.set(pos, v);
    enumerate(pos + 1, i, left - v, cur, out);
  }
  cur.set(pos, 0);
}

std::vector<MultiIndex> proper_indices_up_to(std::size_t i, unsigned max_order) {
  std::vector<MultiIndex> out;
  if (i == 0) {
    out.push_back(MultiIndex());
    return out;
  }
  MultiIndex cur(i);
  enumerate(1, i, max_order, cur, out);
  return out;
}

ComplementResult complement_of_generated(const IndexSet& e, std::size_t i) {
  ComplementResult r;
  auto k = lambda_bound(e, i);
  if (!k) return r;
  r.finite = true;
  r.bound = *k;
  if (*k == 0) return r;
  for (const auto& a : proper_indices_up_to(i, *k - 1))
    if (!in_generated(e, a)) r.elements.insert(a);
  return r;
}

}  // namespace trilin
