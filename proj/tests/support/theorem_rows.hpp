#ifndef ATC_TESTS_THEOREM_ROWS_HPP
#define ATC_TESTS_THEOREM_ROWS_HPP

// Constraint rows and their 0/1 solutions computed straight from the
// orientation-counting oracle, without the packed engine.

#include <cstdint>
#include <vector>

#include "atc/color_vector.hpp"
#include "atc/oracle.hpp"
#include "support/corpus.hpp"

namespace atc::fixtures {

/// One row per s-base f' (f' < s, sum |E| - 1): row[z] = [x^(f'+1_z)] P_G
/// for the vertices z with f'(z) = s(z) - 1. Zero rows are skipped.
inline std::vector<std::vector<std::int64_t>> oracle_rows(const Problem& p) {
  const int n = p.vertex_count();
  std::vector<int> bound(n);
  for (int v = 0; v < n; ++v) bound[v] = p.list_size(v) - 1;
  std::vector<std::vector<std::int64_t>> rows;
  if (p.edge_count() == 0) return rows;
  for_each_degree_vector(bound, p.edge_count() - 1, [&](const std::vector<int>& base) {
    std::vector<std::int64_t> row(n, 0);
    bool nonzero = false;
    for (int z = 0; z < n; ++z) {
      if (base[z] != bound[z]) continue;
      auto f = base;
      ++f[z];
      row[z] = direct_coefficient(p, f);
      nonzero = nonzero || row[z] != 0;
    }
    if (nonzero) rows.push_back(row);
  });
  return rows;
}

inline bool satisfies(const std::vector<std::int64_t>& row, const ColorVector& chi) {
  std::int64_t sum = 0;
  for (int z = 0; z < chi.size(); ++z)
    if (chi[z]) sum += row[z];
  return sum == 0;
}

/// All chi in {0,1}^n satisfying every row, by increasing bits.
inline std::vector<ColorVector> oracle_feasible(const Problem& p) {
  const auto rows = oracle_rows(p);
  std::vector<ColorVector> out;
  const int n = p.vertex_count();
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    ColorVector chi(n, bits);
    bool ok = true;
    for (const auto& r : rows) ok = ok && satisfies(r, chi);
    if (ok) out.push_back(chi);
  }
  return out;
}

/// True if some f < s has a non-zero coefficient.
inline bool oracle_has_witness(const Problem& p) {
  std::vector<int> bound(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) bound[v] = p.list_size(v) - 1;
  bool found = false;
  for_each_degree_vector(bound, p.edge_count(), [&](const std::vector<int>& f) {
    if (!found && direct_coefficient(p, f) != 0) found = true;
  });
  return found;
}

}  // namespace atc::fixtures

#endif
