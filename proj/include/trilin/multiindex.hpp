#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace trilin {

// Tuple of nonnegative integers. Trailing zeros are not significant:
// (1,2) and (1,2,0) compare equal and hash alike.
class MultiIndex {
 public:
  static constexpr std::size_t kMaxDim = 32;
  using Entry = std::uint16_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim);
  MultiIndex(std::initializer_list<unsigned> entries);
  explicit MultiIndex(const std::vector<unsigned>& entries);

  // unit index lambda^{i,k} = (0,..,0,k) with k at position i (1-based)
  static MultiIndex lambda(std::size_t i, unsigned k = 1);

  std::size_t dim() const { return dim_; }
  // 1-based access; positions past dim() read as 0
  unsigned operator[](std::size_t i) const { return i >= 1 && i <= kMaxDim ? e_[i - 1] : 0; }
  void set(std::size_t i, unsigned v);
  void add(std::size_t i, int delta);

  std::size_t proper_index() const { return len_; }
  unsigned order() const;
  // sum of entries 1..i
  unsigned prefix_sum(std::size_t i) const;
  bool is_zero() const { return len_ == 0; }

  MultiIndex padded(std::size_t dim) const;
  std::vector<unsigned> entries() const;
  std::string str() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b);
  // container ordering: lex ordering on padded entries (same as lex_less)
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

  std::size_t hash() const;

 private:
  void refresh_len();

  std::array<Entry, kMaxDim> e_{};
  std::uint8_t dim_ = 0;
  std::uint8_t len_ = 0;
};

enum class LeftOrder { left_equal, left_less, incomparable };

bool lex_less(const MultiIndex& a, const MultiIndex& b);
bool generates(const MultiIndex& a, const MultiIndex& b);
bool strictly_generates(const MultiIndex& a, const MultiIndex& b);
LeftOrder left_compare(const MultiIndex& a, const MultiIndex& b);
bool componentwise_le(const MultiIndex& a, const MultiIndex& b);

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

// accepts "(1,2,0)", "1,2" or "(3)"
MultiIndex parse_multiindex(std::string_view text);

const char* to_string(LeftOrder o);

}  // namespace trilin

template <>
struct std::hash<trilin::MultiIndex> {
  std::size_t operator()(const trilin::MultiIndex& a) const noexcept { return a.hash(); }
};
