#ifndef ATC_CONSTRAINTS_HPP
#define ATC_CONSTRAINTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "atc/color_vector.hpp"

namespace atc {

/// Linear constraint sum_z coefficients[z] * chi(z) = 0 on the
/// characteristic vector chi of every color of a non-colorable assignment.
/// coefficients[z] = [x^(base + 1_z)] P_G; only vertices tight in `base`
/// (base(z) = s(z) - 1) can be non-zero.
struct ConstraintRow {
  std::vector<std::int64_t> coefficients;
  std::vector<int> base;

  bool is_zero() const {
    for (auto c : coefficients)
      if (c != 0) return false;
    return true;
  }

  /// Exact integer evaluation.
  bool satisfied_by(const ColorVector& chi) const {
    __int128 sum = 0;
    for (std::size_t z = 0; z < coefficients.size(); ++z)
      if (chi[static_cast<int>(z)]) sum += coefficients[z];
    return sum == 0;
  }
};

/// Integer rows kept only when linearly independent (over F_p) of the rows
/// already kept. The independence test runs on a reduced row echelon form
/// modulo the Mersenne prime 2^31 - 1; the kept rows themselves stay exact.
class ConstraintBasis {
public:
  static constexpr std::uint64_t kPrime = 2147483647ULL;

  explicit ConstraintBasis(int n = 0) : n_(n) {}

  int vertex_count() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<ConstraintRow>& rows() const noexcept { return rows_; }

  /// Returns true if the row was kept.
  bool add(const ConstraintRow& row) {
    if (static_cast<int>(row.coefficients.size()) != n_) throw std::invalid_argument("constraint row has wrong length");
    if (row.is_zero()) return false;
    std::vector<std::uint64_t> r(n_);
    for (int z = 0; z < n_; ++z) r[z] = reduce(row.coefficients[z]);
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
      std::uint64_t factor = r[pivots_[i]];
      if (factor == 0) continue;
      for (int z = 0; z < n_; ++z) r[z] = sub(r[z], mul(factor, echelon_[i][z]));
    }
    int pivot = -1;
    for (int z = 0; z < n_; ++z)
      if (r[z] != 0) {
        pivot = z;
        break;
      }
    if (pivot < 0) return false;
    const std::uint64_t scale = inverse(r[pivot]);
    for (auto& x : r) x = mul(x, scale);
    // Keep the form reduced: clear the new pivot column in older rows.
    for (auto& old : echelon_) {
      std::uint64_t factor = old[pivot];
      if (factor == 0) continue;
      for (int z = 0; z < n_; ++z) old[z] = sub(old[z], mul(factor, r[z]));
    }
    echelon_.push_back(std::move(r));
    pivots_.push_back(pivot);
    rows_.push_back(row);
    return true;
  }

  bool satisfied_by(const ColorVector& chi) const {
    for (const auto& row : rows_)
      if (!row.satisfied_by(chi)) return false;
    return true;
  }

private:
  static std::uint64_t reduce(std::int64_t x) {
    auto m = static_cast<std::int64_t>(x % static_cast<std::int64_t>(kPrime));
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kPrime) : m);
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
  static std::uint64_t inverse(std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = kPrime - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  int n_;
  std::vector<ConstraintRow> rows_;
  std::vector<std::vector<std::uint64_t>> echelon_;
  std::vector<int> pivots_;
};

}  // namespace atc

#endif  // ATC_CONSTRAINTS_HPP
