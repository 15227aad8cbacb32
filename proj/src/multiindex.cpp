#include "trilin/multiindex.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trilin {

MultiIndex::MultiIndex(std::size_t dim) {
  if (dim > kMaxDim) throw std::invalid_argument("multi-index dimension exceeds 32");
  dim_ = static_cast<std::uint8_t>(dim);
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> entries)
    : MultiIndex(std::vector<unsigned>(entries)) {}

MultiIndex::MultiIndex(const std::vector<unsigned>& entries) : MultiIndex(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] > 0xFFFF) throw std::invalid_argument("multi-index entry too large");
    e_[i] = static_cast<Entry>(entries[i]);
  }
  refresh_len();
}

MultiIndex MultiIndex::lambda(std::size_t i, unsigned k) {
  MultiIndex a(i);
  if (i >= 1) a.set(i, k);
  return a;
}

void MultiIndex::set(std::size_t i, unsigned v) {
  if (i < 1 || i > kMaxDim) throw std::out_of_range("multi-index position out of range");
  if (v > 0xFFFF) throw std::invalid_argument("multi-index entry too large");
  e_[i - 1] = static_cast<Entry>(v);
  if (i > dim_) dim_ = static_cast<std::uint8_t>(i);
  refresh_len();
}

void MultiIndex::add(std::size_t i, int delta) {
  int v = static_cast<int>((*this)[i]) + delta;
  if (v < 0) throw std::invalid_argument("multi-index entry would become negative");
  set(i, static_cast<unsigned>(v));
}

void MultiIndex::refresh_len() {
  std::size_t k = kMaxDim;
  while (k > 0 && e_[k - 1] == 0) --k;
  len_ = static_cast<std::uint8_t>(k);
}

unsigned MultiIndex::order() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < len_; ++i) s += e_[i];
  return s;
}

unsigned MultiIndex::prefix_sum(std::size_t i) const {
  unsigned s = 0;
  for (std::size_t j = 0; j < std::min<std::size_t>(i, len_); ++j) s += e_[j];
  return s;
}

MultiIndex MultiIndex::padded(std::size_t dim) const {
  MultiIndex r = *this;
  if (dim < len_) throw std::invalid_argument("cannot pad below proper index");
  if (dim > kMaxDim) throw std::invalid_argument("multi-index dimension exceeds 32");
  for (std::size_t i = dim; i < kMaxDim; ++i) r.e_[i] = 0;
  r.dim_ = static_cast<std::uint8_t>(dim);
  return r;
}

std::vector<unsigned> MultiIndex::entries() const {
  std::size_t d = std::max<std::size_t>(dim_, len_);
  return std::vector<unsigned>(e_.begin(), e_.begin() + d);
}

std::string MultiIndex::str() const {
  std::size_t d = std::max<std::size_t>({std::size_t{1}, dim_, len_});
  std::string s = "(";
  for (std::size_t i = 0; i < d; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  return a.len_ == b.len_ && std::equal(a.e_.begin(), a.e_.begin() + a.len_, b.e_.begin());
}

bool operator<(const MultiIndex& a, const MultiIndex& b) { return lex_less(a, b); }

std::size_t MultiIndex::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
  return h;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
  std::size_t k = std::max(a.proper_index(), b.proper_index());
  for (std::size_t i = 1; i <= k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool generates(const MultiIndex& a, const MultiIndex& b) {
  if (a == b) return true;
  std::size_t ka = a.proper_index(), kb = b.proper_index();
  if (kb == 0 || ka < kb) return false;
  unsigned sa = 0, sb = 0;
  for (std::size_t i = 1; i <= ka; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool strictly_generates(const MultiIndex& a, const MultiIndex& b) {
  return !(a == b) && generates(a, b);
}

LeftOrder left_compare(const MultiIndex& a, const MultiIndex& b) {
  std::size_t k = b.proper_index();
  if (k == 0) return a.is_zero() ? LeftOrder::left_equal : LeftOrder::incomparable;
  bool strict = false;
  for (std::size_t i = 1; i <= k; ++i) {
    if (a[i] > b[i]) return LeftOrder::incomparable;
    if (a[i] < b[i]) strict = true;
  }
  return strict ? LeftOrder::left_less : LeftOrder::left_equal;
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  std::size_t k = std::max(a.proper_index(), b.proper_index());
  for (std::size_t i = 1; i <= k; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  std::size_t d = std::max(a.dim(), b.dim());
  MultiIndex r(d);
  for (std::size_t i = 1; i <= std::max(a.proper_index(), b.proper_index()); ++i) r.set(i, a[i] + b[i]);
  return r;
}

MultiIndex parse_multiindex(std::string_view text) {
  std::vector<unsigned> v;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  while (true) {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed multi-index: " + std::string(text));
    unsigned long x = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      x = x * 10 + static_cast<unsigned>(text[i] - '0');
      if (x > 0xFFFF) throw std::invalid_argument("multi-index entry too large");
      ++i;
    }
    v.push_back(static_cast<unsigned>(x));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (paren) {
    if (i >= text.size() || text[i] != ')')
      throw std::invalid_argument("malformed multi-index: " + std::string(text));
    ++i;
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("malformed multi-index: " + std::string(text));
  if (v.size() > MultiIndex::kMaxDim) throw std::invalid_argument("multi-index dimension exceeds 32");
  return MultiIndex(v);
}

const char* to_string(LeftOrder o) {
  switch (o) {
    case LeftOrder::left_equal: return "left_equal";
    case LeftOrder::left_less: return "left_less";
    default: return "incomparable";
  }
}

}  // namespace trilin
