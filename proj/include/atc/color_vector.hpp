#ifndef ATC_COLOR_VECTOR_HPP
#define ATC_COLOR_VECTOR_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace atc {

/// Characteristic vector of one color: bit v is set iff the color is in the
/// list of vertex v. Supports up to 64 vertices.
class ColorVector {
public:
  ColorVector() = default;
  ColorVector(int size, std::uint64_t bits) : size_(size), bits_(bits) {
    if (size < 0 || size > 64) throw std::out_of_range("color vector size must be in [0, 64]");
  }

  static ColorVector from_entries(const std::vector<int>& entries) {
    std::uint64_t bits = 0;
    for (std::size_t v = 0; v < entries.size(); ++v)
      if (entries[v]) bits |= 1ULL << v;
    return ColorVector(static_cast<int>(entries.size()), bits);
  }

  int size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool operator[](int v) const { return (bits_ >> v) & 1ULL; }
  bool empty() const noexcept { return bits_ == 0; }
  int count() const noexcept { return std::popcount(bits_); }

  std::vector<int> entries() const {
    std::vector<int> out(size_);
    for (int v = 0; v < size_; ++v) out[v] = (*this)[v];
    return out;
  }

  /// "(1,1,0)"
  std::string to_string() const {
    std::string s = "(";
    for (int v = 0; v < size_; ++v) {
      if (v) s += ',';
      s += (*this)[v] ? '1' : '0';
    }
    return s + ")";
  }

  friend bool operator==(const ColorVector&, const ColorVector&) = default;
  friend auto operator<=>(const ColorVector&, const ColorVector&) = default;

private:
  int size_ = 0;
  std::uint64_t bits_ = 0;
};

/// A list assignment up to renaming of colors: `multiplicity` colors share
/// the characteristic vector `vector`.
struct PatternEntry {
  ColorVector vector;
  int multiplicity = 0;

  friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

struct AssignmentPattern {
  std::vector<PatternEntry> entries;

  int color_count() const {
    int t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
  }

  /// Componentwise sum of multiplicity * vector, i.e. the list sizes.
  std::vector<int> list_sizes(int n) const {
    std::vector<int> s(n, 0);
    for (const auto& e : entries)
      for (int v = 0; v < n; ++v)
        if (e.vector[v]) s[v] += e.multiplicity;
    return s;
  }

  /// The lists themselves, colors numbered 0..t-1 in entry order.
  std::vector<std::vector<int>> lists(int n) const {
    std::vector<std::vector<int>> l(n);
    int color = 0;
    for (const auto& e : entries)
      for (int k = 0; k < e.multiplicity; ++k, ++color)
        for (int v = 0; v < n; ++v)
          if (e.vector[v]) l[v].push_back(color);
    return l;
  }

  /// Same pattern with entries ordered by increasing vector bits.
  AssignmentPattern sorted() const {
    auto copy = *this;
    std::sort(copy.entries.begin(), copy.entries.end(),
              [](const PatternEntry& a, const PatternEntry& b) { return a.vector.bits() < b.vector.bits(); });
    return copy;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ", ";
      s += entries[i].vector.to_string() + "x" + std::to_string(entries[i].multiplicity);
    }
    return s + "}";
  }

  friend bool operator==(const AssignmentPattern&, const AssignmentPattern&) = default;
};

}  // namespace atc

#endif  // ATC_COLOR_VECTOR_HPP
