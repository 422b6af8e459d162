#ifndef ATC_CHECKED_HPP
#define ATC_CHECKED_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace atc {

class OverflowError : public std::overflow_error {
public:
  OverflowError() : std::overflow_error("coefficient overflow (signed 64-bit)") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError();
  return -a;
}

}  // namespace atc

#endif  // ATC_CHECKED_HPP
