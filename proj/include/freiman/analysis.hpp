#pragma once

#include <cstdint>
#include <optional>

#include "freiman/chordal.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideals.hpp"

namespace freiman {

// Both routes to the Freiman property: the direct count
// mu(I^2) = l(I) mu(I) - C(l(I), 2), and chordality of the sorted graph.
// The sorted graph and chordality verdict are present iff the set is
// sortable, since only then does chordality characterize the property.
struct AnalysisReport {
  std::int64_t mu = 0;
  int spread = 0;
  std::int64_t mu_square = 0;
  std::int64_t bound = 0;
  std::int64_t gap = 0;
  bool freiman = false;
  bool sortable = false;
  std::optional<Graph> sorted;
  std::optional<ChordalityVerdict> chordal;
};

inline std::int64_t freiman_bound(std::int64_t mu, std::int64_t spread) {
  return spread * mu - spread * (spread - 1) / 2;
}

inline AnalysisReport freiman_report(const GeneratorSet& g) {
  AnalysisReport r;
  r.mu = static_cast<std::int64_t>(g.size());
  r.spread = analytic_spread(g);
  r.mu_square = mu_square(g);
  r.bound = freiman_bound(r.mu, r.spread);
  r.gap = r.mu_square - r.bound;
  r.freiman = r.gap == 0;
  r.sortable = is_sortable(g);
  if (r.sortable) {
    r.sorted = sorted_graph(g);
    r.chordal = is_chordal(*r.sorted);
  }
  return r;
}

}  // namespace freiman
