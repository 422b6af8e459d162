#ifndef ATC_TERM_LIST_HPP
#define ATC_TERM_LIST_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "atc/packed_degree.hpp"

namespace atc {

/// Marker value of a term that is not tight.
inline constexpr int kNoMarker = -1;

/// Triple (f', marker, c). With marker == kNoMarker the term is c * x^f';
/// otherwise marker is the processing position of a vertex w with
/// f'(w) = s(w) - 1 and the term is c * x^(f' + 1_w).
template <std::size_t W>
struct Term {
  PackedDegree<W> degree;
  int marker = kNoMarker;
  std::int64_t coefficient = 0;

  /// Sort key: f' first, then the marker (kNoMarker before every position).
  friend std::strong_ordering key_compare(const Term& a, const Term& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.marker <=> b.marker;
  }
};

template <std::size_t W>
using TermList = std::vector<Term<W>>;

/// Strictly increasing keys and no zero coefficients.
template <std::size_t W>
bool is_canonical(const TermList<W>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) return false;
    if (i > 0 && key_compare(terms[i - 1], terms[i]) >= 0) return false;
  }
  return true;
}

/// The single term 1 (all degrees zero).
template <std::size_t W>
TermList<W> unit_term_list() {
  TermList<W> t(1);
  t[0].coefficient = 1;
  return t;
}

}  // namespace atc

#endif  // ATC_TERM_LIST_HPP
