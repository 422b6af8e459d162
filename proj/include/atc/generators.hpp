#ifndef ATC_GENERATORS_HPP
#define ATC_GENERATORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "atc/graph.hpp"

namespace atc {

namespace detail {

inline std::vector<int> degrees(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline std::vector<Edge> glued_clique_edges(int copies, int clique) {
  std::vector<Edge> edges;
  for (int k = 0; k < copies; ++k) {
    int base = k * (clique - 1);
    for (int i = 0; i < clique; ++i)
      for (int j = i + 1; j < clique; ++j) edges.push_back({base + i, base + j});
  }
  return edges;
}

}  // namespace detail

/// `copies` copies of K_clique in a path, consecutive copies sharing one
/// vertex; list sizes equal the degrees.
inline Problem glued_cliques(int copies, int clique) {
  if (copies < 2 || clique < 3) throw std::invalid_argument("glued-cliques needs a >= 2 and b >= 3");
  int n = copies * (clique - 1) + 1;
  auto edges = detail::glued_clique_edges(copies, clique);
  auto sizes = detail::degrees(n, edges);
  return Problem(n, std::move(edges), std::move(sizes),
                 "glued-cliques " + std::to_string(copies) + " " + std::to_string(clique));
}

/// As glued_cliques, with the edge between the two highest-numbered vertices
/// of the last copy removed. List sizes equal the degrees after removal.
inline Problem glued_cliques_minus_edge(int copies, int clique) {
  if (copies < 2 || clique < 3)
    throw std::invalid_argument("glued-cliques-minus-edge needs a >= 2 and b >= 3");
  int n = copies * (clique - 1) + 1;
  auto edges = detail::glued_clique_edges(copies, clique);
  edges.pop_back();
  auto sizes = detail::degrees(n, edges);
  return Problem(n, std::move(edges), std::move(sizes),
                 "glued-cliques-minus-edge " + std::to_string(copies) + " " + std::to_string(clique));
}

/// a x a grid with one diagonal per cell (lower-left to upper-right, rows
/// numbered downwards) and four apex vertices attached to the top row, bottom
/// row, left column and right column. Grid vertex (r, c) is r*a + c; the
/// apexes are a*a .. a*a+3. The apexes and the four grid corners get list
/// size 3, all other vertices 5.
inline Problem grid_with_diagonals(int a) {
  if (a < 2) throw std::invalid_argument("grid-diag needs a >= 2");
  auto id = [a](int r, int c) { return r * a + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < a; ++r)
    for (int c = 0; c + 1 < a; ++c) edges.push_back({id(r, c), id(r, c + 1)});
  for (int r = 0; r + 1 < a; ++r)
    for (int c = 0; c < a; ++c) edges.push_back({id(r, c), id(r + 1, c)});
  for (int r = 0; r + 1 < a; ++r)
    for (int c = 0; c + 1 < a; ++c) edges.push_back({id(r, c + 1), id(r + 1, c)});
  const int top = a * a, bottom = top + 1, left = top + 2, right = top + 3;
  for (int i = 0; i < a; ++i) {
    edges.push_back({id(0, i), top});
    edges.push_back({id(a - 1, i), bottom});
    edges.push_back({id(i, 0), left});
    edges.push_back({id(i, a - 1), right});
  }
  const int n = a * a + 4;
  std::vector<int> sizes(n, 5);
  for (int v : {top, bottom, left, right, id(0, 0), id(0, a - 1), id(a - 1, 0), id(a - 1, a - 1)}) sizes[v] = 3;
  return Problem(n, std::move(edges), std::move(sizes), "grid-diag " + std::to_string(a));
}

/// Cycle 0..3n-1 plus the triangles {i, i+n, i+2n}; all list sizes 3.
/// Needs n >= 2 (for n = 1 the triangle coincides with the cycle).
inline Problem cycle_plus_triangles(int n) {
  if (n < 2) throw std::invalid_argument("cycle-triangles needs n >= 2");
  const int len = 3 * n;
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
  for (int i = 0; i < len; ++i) edges.push_back({i, (i + n) % len});
  return Problem(len, std::move(edges), std::vector<int>(len, 3), "cycle-triangles " + std::to_string(n));
}

/// Dispatch by family name: glued-cliques, glued-cliques-minus-edge,
/// grid-diag, cycle-triangles.
inline Problem generate_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "glued-cliques") {
    need(2);
    return glued_cliques(params[0], params[1]);
  }
  if (name == "glued-cliques-minus-edge") {
    need(2);
    return glued_cliques_minus_edge(params[0], params[1]);
  }
  if (name == "grid-diag") {
    need(1);
    return grid_with_diagonals(params[0]);
  }
  if (name == "cycle-triangles") {
    need(1);
    return cycle_plus_triangles(params[0]);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace atc

#endif  // ATC_GENERATORS_HPP
