#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freiman/error.hpp"
#include "freiman/ideals.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

// Undirected simple graph on vertices 0..n-1. Adjacency is a packed bitset
// over the strict lower triangle. Vertices may carry monomial labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count)
      : n_(vertex_count), bits_((pair_count(vertex_count) + 63) / 64, 0) {}

  explicit Graph(std::vector<Monomial> labels) : Graph(labels.size()) { labels_ = std::move(labels); }

  std::size_t vertex_count() const noexcept { return n_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<Monomial>& labels() const noexcept { return labels_; }

  std::string label(std::size_t v) const {
    return labels_.empty() ? std::to_string(v) : to_string(labels_[v]);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    if (u == v) return false;
    const std::size_t k = slot(u, v);
    return (bits_[k / 64] >> (k % 64)) & 1U;
  }

  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loops are not allowed");
    const std::size_t k = slot(u, v);
    bits_[k / 64] |= std::uint64_t{1} << (k % 64);
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
      if (adjacent(u, v)) out.push_back(u);
    return out;
  }

  // Edges (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  Graph complement() const {
    Graph g(n_);
    g.labels_ = labels_;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!adjacent(i, j)) g.add_edge(i, j);
    return g;
  }

  // Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(const std::vector<std::size_t>& vertices) const {
    Graph g(vertices.size());
    if (!labels_.empty())
      for (auto v : vertices) g.labels_.push_back(labels_[v]);
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (adjacent(vertices[a], vertices[b])) g.add_edge(a, b);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.labels_ == b.labels_;
  }

 private:
  static std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

  static std::size_t slot(std::size_t u, std::size_t v) {
    if (u < v) std::swap(u, v);
    return u * (u - 1) / 2 + v;
  }

  void check_vertex(std::size_t v) const {
    if (v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Monomial> labels_;
};

// Edges are the distinct pairs {u, v} of generators that sorting fixes.
inline Graph sorted_graph(const GeneratorSet& g) {
  Graph graph(g.generators());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (is_sorted(g[i], g[j])) graph.add_edge(i, j);
  return graph;
}

// Edges are the unsorted pairs; these index the leading terms t_u t_v of the
// sorting relations.
inline Graph unsorted_graph(const GeneratorSet& g) { return sorted_graph(g).complement(); }

// Consecutive vertices (cyclically) adjacent, all other pairs non-adjacent.
inline bool is_induced_cycle(const Graph& graph, const std::vector<std::size_t>& cycle) {
  const std::size_t t = cycle.size();
  if (t < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<std::size_t> sorted_ids = cycle;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
    throw Error("cycle repeats a vertex");
  if (sorted_ids.back() >= graph.vertex_count()) throw Error("cycle vertex out of range");
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == t - 1);
      if (graph.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

// Label-based variant for cycles given as monomials. Returns false if some
// monomial is not a vertex of the graph.
inline bool is_induced_cycle(const Graph& graph, const std::vector<Monomial>& cycle) {
  std::vector<std::size_t> ids;
  for (const auto& m : cycle) {
    auto it = std::find(graph.labels().begin(), graph.labels().end(), m);
    if (it == graph.labels().end()) return false;
    ids.push_back(static_cast<std::size_t>(it - graph.labels().begin()));
  }
  return is_induced_cycle(graph, ids);
}

// Undirected DOT with vertices in index order and edges in lexicographic order.
inline void write_dot(std::ostream& os, const Graph& graph, const std::string& name = "sorted_graph") {
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << graph.label(v) << "\"];\n";
  for (auto [i, j] : graph.edges()) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
}

inline std::string to_dot(const Graph& graph, const std::string& name = "sorted_graph") {
  std::ostringstream os;
  write_dot(os, graph, name);
  return os.str();
}

}  // namespace freiman
