#ifndef ATC_PACKED_DEGREE_HPP
#define ATC_PACKED_DEGREE_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "atc/graph.hpp"
#include "atc/ordering.hpp"

namespace atc {

/// Largest number of 64-bit words a packed degree vector may occupy.
inline constexpr std::size_t kMaxDegreeWords = 8;

/// Bit layout of degree vectors. Fields follow the processing order, the
/// first processed vertex in the most significant bits of word 0, so that
/// comparing the words as a big-endian sequence is lexicographic comparison
/// of degree functions. Fields never straddle a word; the unused low bits of
/// each word are zero padding.
class DegreeLayout {
public:
  DegreeLayout() = default;

  DegreeLayout(const Problem& p, const VertexOrdering& ordering)
      : n_(p.vertex_count()), order_(ordering.order), position_(ordering.positions()) {
    if (!ordering.is_permutation() || static_cast<int>(order_.size()) != n_)
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    bits_ = std::bit_width(static_cast<unsigned>(p.max_list_size()));
    per_word_ = 64 / bits_;
    words_ = (static_cast<std::size_t>(n_) + per_word_ - 1) / per_word_;
    if (words_ > kMaxDegreeWords) throw std::length_error("graph too large for packed degree vectors");
    mask_ = (bits_ == 64) ? ~0ULL : ((1ULL << bits_) - 1);
    limit_.resize(n_);
    for (int i = 0; i < n_; ++i) limit_[i] = p.list_size(order_[i]);
  }

  int vertex_count() const noexcept { return n_; }
  int bits_per_field() const noexcept { return bits_; }
  std::size_t words() const noexcept { return words_; }

  /// Vertex processed at position i.
  int vertex_at(int pos) const { return order_[pos]; }
  int position_of(int v) const { return position_[v]; }
  /// s of the vertex at position i.
  int limit_at(int pos) const { return limit_[pos]; }

  std::size_t word_of(int pos) const noexcept { return static_cast<std::size_t>(pos) / per_word_; }
  int shift_of(int pos) const noexcept { return 64 - bits_ * (pos % per_word_ + 1); }
  std::uint64_t field_mask() const noexcept { return mask_; }

  /// Mask selecting the fields of positions 0..count-1 within each word.
  template <std::size_t W>
  std::array<std::uint64_t, W> prefix_mask(int count) const {
    std::array<std::uint64_t, W> m{};
    for (int pos = 0; pos < count; ++pos) m[word_of(pos)] |= mask_ << shift_of(pos);
    return m;
  }

private:
  int n_ = 0;
  int bits_ = 1;
  int per_word_ = 64;
  std::size_t words_ = 1;
  std::uint64_t mask_ = 1;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<int> limit_;
};

/// Degree function packed under a DegreeLayout with W words.
template <std::size_t W>
struct PackedDegree {
  std::array<std::uint64_t, W> words{};

  int get(const DegreeLayout& layout, int pos) const {
    return static_cast<int>((words[layout.word_of(pos)] >> layout.shift_of(pos)) & layout.field_mask());
  }

  void increment(const DegreeLayout& layout, int pos) {
    words[layout.word_of(pos)] += 1ULL << layout.shift_of(pos);
  }

  friend bool operator==(const PackedDegree&, const PackedDegree&) = default;
  friend auto operator<=>(const PackedDegree&, const PackedDegree&) = default;
};

/// Packs f (indexed by original vertex) under the layout.
template <std::size_t W>
PackedDegree<W> pack(const DegreeLayout& layout, const std::vector<int>& f) {
  PackedDegree<W> d;
  for (int v = 0; v < layout.vertex_count(); ++v) {
    int pos = layout.position_of(v);
    if (f[v] < 0 || static_cast<std::uint64_t>(f[v]) > layout.field_mask())
      throw std::out_of_range("degree does not fit its field");
    d.words[layout.word_of(pos)] |= static_cast<std::uint64_t>(f[v]) << layout.shift_of(pos);
  }
  return d;
}

/// Inverse of pack: degrees indexed by original vertex.
template <std::size_t W>
std::vector<int> unpack(const DegreeLayout& layout, const PackedDegree<W>& d) {
  std::vector<int> f(layout.vertex_count());
  for (int pos = 0; pos < layout.vertex_count(); ++pos) f[layout.vertex_at(pos)] = d.get(layout, pos);
  return f;
}

}  // namespace atc

#endif  // ATC_PACKED_DEGREE_HPP
