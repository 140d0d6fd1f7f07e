#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "freiman/error.hpp"
#include "freiman/graph.hpp"

namespace freiman {

using VertexOrder = std::vector<std::size_t>;

// Lexicographic breadth-first search by partition refinement. Cells are kept
// in index order, so the next vertex is always the lowest-indexed member of
// the first cell and the order is fully deterministic.
inline VertexOrder lexbfs(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  VertexOrder order;
  order.reserve(n);
  std::vector<std::vector<std::size_t>> cells;
  if (n > 0) {
    cells.emplace_back(n);
    for (std::size_t v = 0; v < n; ++v) cells.front()[v] = v;
  }
  while (!cells.empty()) {
    const std::size_t pivot = cells.front().front();
    cells.front().erase(cells.front().begin());
    if (cells.front().empty()) cells.erase(cells.begin());
    order.push_back(pivot);

    std::vector<std::vector<std::size_t>> refined;
    refined.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      std::vector<std::size_t> in, out;
      for (auto u : cell) (graph.adjacent(pivot, u) ? in : out).push_back(u);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    cells = std::move(refined);
  }
  return order;
}

// Vertex v whose later neighbors are not a clique: `first_later` is v's
// earliest later neighbor and `other` a later neighbor not adjacent to it.
struct PeoWitness {
  std::size_t vertex;
  std::size_t first_later;
  std::size_t other;
};

struct PeoCheck {
  bool perfect = false;
  std::optional<PeoWitness> witness;
  explicit operator bool() const noexcept { return perfect; }
};

namespace detail {

inline std::vector<std::size_t> positions_of(const Graph& graph, const VertexOrder& order) {
  const std::size_t n = graph.vertex_count();
  if (order.size() != n) throw Error("vertex order is not a permutation: wrong length");
  std::vector<std::size_t> pos(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != std::numeric_limits<std::size_t>::max())
      throw Error("vertex order is not a permutation");
    pos[order[i]] = i;
  }
  return pos;
}

// Shortest path from `from` to `to` using only vertices with allowed[v].
inline std::optional<std::vector<std::size_t>> shortest_path(const Graph& graph, std::size_t from,
                                                             std::size_t to,
                                                             const std::vector<bool>& allowed) {
  const std::size_t n = graph.vertex_count();
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, none);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (std::size_t y = 0; y < n; ++y) {
      if (parent[y] != none || !allowed[y] || !graph.adjacent(x, y)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[to] == none) return std::nullopt;
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle through `center`, `a`, `b` (a, b non-adjacent neighbors of
// center): close a shortest a-b path that avoids the rest of N[center].
// `restrict_to` optionally narrows the vertices the path may use.
inline std::optional<std::vector<std::size_t>> close_cycle(const Graph& graph, std::size_t center,
                                                           std::size_t a, std::size_t b,
                                                           const std::vector<bool>* restrict_to) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> allowed(n);
  for (std::size_t x = 0; x < n; ++x)
    allowed[x] = x != center && !graph.adjacent(center, x) && (!restrict_to || (*restrict_to)[x]);
  allowed[a] = allowed[b] = true;
  auto path = shortest_path(graph, a, b, allowed);
  if (!path) return std::nullopt;
  std::vector<std::size_t> cycle{center};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

}  // namespace detail

// Checks that `order` is a perfect elimination ordering: each vertex's later
// neighbors form a clique. It suffices that the earliest later neighbor is
// adjacent to all the others.
inline PeoCheck check_peo(const Graph& graph, const VertexOrder& order) {
  const auto pos = detail::positions_of(graph, order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t v = order[i];
    std::vector<std::size_t> later;
    for (auto u : graph.neighbors(v))
      if (pos[u] > i) later.push_back(u);
    if (later.empty()) continue;
    const std::size_t first =
        *std::min_element(later.begin(), later.end(), [&](auto x, auto y) { return pos[x] < pos[y]; });
    for (auto w : later)
      if (w != first && !graph.adjacent(first, w)) return {false, PeoWitness{v, first, w}};
  }
  return {true, std::nullopt};
}

struct ChordalityVerdict {
  bool chordal = false;
  std::optional<VertexOrder> peo;                          // iff chordal
  std::optional<std::vector<std::size_t>> chordless_cycle;  // iff not chordal
};

// Chordless cycle of length >= 4 in a graph known not to be chordal. Starts
// from the PEO violation, letting the path use only vertices after the
// violating one; falls back to the unrestricted search, then to a scan over
// all centers.
inline std::vector<std::size_t> extract_chordless_cycle(const Graph& graph, const VertexOrder& order,
                                                        const PeoWitness& witness) {
  const auto pos = detail::positions_of(graph, order);
  std::vector<bool> later(graph.vertex_count());
  for (std::size_t x = 0; x < later.size(); ++x) later[x] = pos[x] > pos[witness.vertex];

  if (auto c = detail::close_cycle(graph, witness.vertex, witness.first_later, witness.other, &later)) return *c;
  if (auto c = detail::close_cycle(graph, witness.vertex, witness.first_later, witness.other, nullptr)) return *c;
  for (std::size_t x = 0; x < graph.vertex_count(); ++x) {
    const auto nbrs = graph.neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!graph.adjacent(nbrs[i], nbrs[j]))
          if (auto c = detail::close_cycle(graph, x, nbrs[i], nbrs[j], nullptr)) return *c;
  }
  throw std::logic_error("PEO violation found but no chordless cycle exists");
}

inline ChordalityVerdict is_chordal(const Graph& graph) {
  VertexOrder order = lexbfs(graph);
  std::reverse(order.begin(), order.end());
  const PeoCheck check = check_peo(graph, order);
  if (check.perfect) return {true, std::move(order), std::nullopt};
  auto cycle = extract_chordless_cycle(graph, order, *check.witness);
  if (cycle.size() < 4 || !is_induced_cycle(graph, cycle))
    throw std::logic_error("chordless cycle extraction produced an invalid certificate");
  return {false, std::nullopt, std::move(cycle)};
}

}  // namespace freiman
