#ifndef ATC_MULTIPLY_HPP
#define ATC_MULTIPLY_HPP

#include <array>
#include <cstdint>

#include "atc/checked.hpp"
#include "atc/term_list.hpp"

namespace atc {

enum class ProductMode { Standard, Extended };

namespace detail {

// One of the merge inputs: a filtered, transformed view of the input list
// that is increasing in (f', marker) order.
template <std::size_t W>
struct MergeStream {
  enum class Kind { Raise, Tighten };

  Kind kind;
  int pos;         // vertex whose degree is raised (or which becomes the marker)
  std::size_t word;
  int shift;
  std::uint64_t mask;
  std::uint64_t top;  // s - 1 of pos; Raise needs field < top, Tighten needs field == top
  bool negate;
  std::size_t next = 0;
  bool active = false;
  Term<W> head;

  bool accepts(const Term<W>& t) const {
    std::uint64_t value = (t.degree.words[word] >> shift) & mask;
    if (kind == Kind::Raise) return value < top;
    return t.marker == kNoMarker && value == top;
  }

  void advance(const TermList<W>& in) {
    while (next < in.size() && !accepts(in[next])) ++next;
    active = next < in.size();
    if (!active) return;
    head = in[next++];
    if (kind == Kind::Raise)
      head.degree.words[word] += 1ULL << shift;
    else
      head.marker = pos;
    if (negate) head.coefficient = checked_neg(head.coefficient);
  }
};

}  // namespace detail

/// out = trunc(in * (x_head - x_tail)), positions given in processing order.
///
/// Standard mode keeps monomials with every degree below s. Extended mode
/// also keeps monomials where exactly one vertex reaches s, using the tight
/// marker. The result is built by merging up to four increasing streams;
/// equal keys are combined and zero sums dropped. `out` is overwritten.
template <std::size_t W>
void multiply_edge(const TermList<W>& in, TermList<W>& out, const DegreeLayout& layout, int tail_pos,
                   int head_pos, ProductMode mode) {
  using Stream = detail::MergeStream<W>;
  out.clear();

  auto make = [&](typename Stream::Kind kind, int pos, bool negate) {
    const auto top = static_cast<std::uint64_t>(layout.limit_at(pos)) - 1;
    return Stream{kind, pos, layout.word_of(pos), layout.shift_of(pos), layout.field_mask(), top, negate, 0, false, {}};
  };

  std::array<Stream, 4> streams{
      make(Stream::Kind::Raise, head_pos, false),
      make(Stream::Kind::Raise, tail_pos, true),
      make(Stream::Kind::Tighten, head_pos, false),
      make(Stream::Kind::Tighten, tail_pos, true),
  };
  const std::size_t used = mode == ProductMode::Extended ? 4 : 2;
  for (std::size_t k = 0; k < used; ++k) streams[k].advance(in);

  for (;;) {
    const Term<W>* best = nullptr;
    for (std::size_t k = 0; k < used; ++k)
      if (streams[k].active && (!best || key_compare(streams[k].head, *best) < 0)) best = &streams[k].head;
    if (!best) break;

    Term<W> merged = *best;
    merged.coefficient = 0;
    for (std::size_t k = 0; k < used; ++k) {
      if (streams[k].active && key_compare(streams[k].head, merged) == 0) {
        merged.coefficient = checked_add(merged.coefficient, streams[k].head.coefficient);
        streams[k].advance(in);
      }
    }
    if (merged.coefficient != 0) out.push_back(merged);
  }
}

}  // namespace atc

#endif  // ATC_MULTIPLY_HPP
