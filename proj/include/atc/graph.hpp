#ifndef ATC_GRAPH_HPP
#define ATC_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atc {

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed edge of the reference orientation. The graph polynomial is the
/// product of (x_head - x_tail) over all arcs.
struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// A graph together with the list size s(v) of every vertex.
class Problem {
public:
  Problem() = default;

  Problem(int n, std::vector<Edge> edges, std::vector<int> list_sizes, std::string name = {})
      : n_(n), edges_(std::move(edges)), sizes_(std::move(list_sizes)), name_(std::move(name)) {
    if (n_ < 1) throw std::invalid_argument("vertex count must be positive");
    if (static_cast<int>(sizes_.size()) != n_)
      throw std::invalid_argument("expected " + std::to_string(n_) + " list sizes");
    for (int v = 0; v < n_; ++v)
      if (sizes_[v] < 1)
        throw std::invalid_argument("list size of vertex " + std::to_string(v) + " must be positive");
    adjacency_.assign(n_, {});
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate edge");
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& list_sizes() const noexcept { return sizes_; }
  int list_size(int v) const { return sizes_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  const std::string& name() const noexcept { return name_; }

  bool adjacent(int a, int b) const {
    const auto& nbrs = adjacency_.at(a);
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  int max_list_size() const { return *std::max_element(sizes_.begin(), sizes_.end()); }

  Problem without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_)
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
    return Problem(n_, std::move(kept), sizes_, name_);
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> adjacency_;
  std::string name_;
};

/// Each edge is oriented from its smaller to its larger input index.
inline std::vector<Arc> reference_orientation(const Problem& p) {
  std::vector<Arc> arcs;
  arcs.reserve(p.edges().size());
  for (const auto& e : p.edges()) arcs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  return arcs;
}

namespace detail {

inline std::vector<long long> parse_ints(const std::string& text, int line) {
  std::istringstream in(text);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line, "expected an integer, got '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

/// Reads the text problem format:
///
///     n m
///     s(0) ... s(n-1)
///     u v          (m lines, 0-based endpoints)
///
/// Blank lines and lines starting with '#' are ignored.
inline Problem parse_problem(std::istream& in, std::string name = {}) {
  std::vector<std::pair<int, std::vector<long long>>> lines;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.emplace_back(line_no, detail::parse_ints(text, line_no));
  }
  if (lines.empty()) throw ParseError(line_no, "empty problem");

  const auto& [header_line, header] = lines[0];
  if (header.size() != 2) throw ParseError(header_line, "header must be 'n m'");
  long long n = header[0];
  long long m = header[1];
  if (n < 1) throw ParseError(header_line, "vertex count must be positive");
  if (m < 0) throw ParseError(header_line, "edge count must be non-negative");
  if (lines.size() < 2) throw ParseError(line_no, "missing list sizes");
  if (static_cast<long long>(lines.size()) != 2 + m)
    throw ParseError(lines.size() < static_cast<std::size_t>(2 + m) ? line_no : lines[2 + m].first,
                     "expected " + std::to_string(m) + " edge lines");

  const auto& [sizes_line, raw_sizes] = lines[1];
  if (static_cast<long long>(raw_sizes.size()) != n)
    throw ParseError(sizes_line, "expected " + std::to_string(n) + " list sizes");
  std::vector<int> sizes;
  for (auto s : raw_sizes) {
    if (s <= 0) throw ParseError(sizes_line, "list sizes must be positive");
    sizes.push_back(static_cast<int>(s));
  }

  std::vector<Edge> edges;
  std::vector<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    const auto& [edge_line, ends] = lines[2 + i];
    if (ends.size() != 2) throw ParseError(edge_line, "edge line must be 'u v'");
    if (ends[0] < 0 || ends[0] >= n || ends[1] < 0 || ends[1] >= n)
      throw ParseError(edge_line, "edge endpoint out of range");
    if (ends[0] == ends[1]) throw ParseError(edge_line, "self-loop");
    Edge e{static_cast<int>(std::min(ends[0], ends[1])), static_cast<int>(std::max(ends[0], ends[1]))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError(edge_line, "duplicate edge");
    edges.push_back(e);
  }
  return Problem(static_cast<int>(n), std::move(edges), std::move(sizes), std::move(name));
}

inline Problem parse_problem(const std::string& text, std::string name = {}) {
  std::istringstream in(text);
  return parse_problem(in, std::move(name));
}

inline void write_problem(std::ostream& out, const Problem& p) {
  if (!p.name().empty()) out << "# " << p.name() << '\n';
  out << p.vertex_count() << ' ' << p.edge_count() << '\n';
  for (int v = 0; v < p.vertex_count(); ++v) out << (v ? " " : "") << p.list_size(v);
  out << '\n';
  for (const auto& e : p.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace atc

#endif  // ATC_GRAPH_HPP
