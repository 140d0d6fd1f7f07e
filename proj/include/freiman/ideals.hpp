#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freiman/error.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

// Canonical generator order: lex monomial order with x1 > x2 > ... > xn,
// largest first (x1^2, x1*x2, x1*x3, x2^2, ...).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  return a.exponents() > b.exponents();
}

// G(I) of an equigenerated monomial ideal: nonempty, duplicate-free,
// canonically ordered monomials of one degree d >= 1 in n variables.
// Distinct monomials of equal degree never divide each other, so any such
// set is automatically a minimal generating set.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Monomial> gens, const Caps& caps = {}) : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error("generator set must be nonempty");
    n_ = gens_.front().ambient();
    d_ = gens_.front().degree();
    if (d_ < 1) throw Error("generators must have positive degree");
    for (const auto& g : gens_) {
      if (g.ambient() != n_) throw AmbientMismatch(n_, g.ambient());
      if (g.degree() != d_) throw DegreeMismatch(d_, g.degree());
    }
    check_caps(gens_.front(), caps);
    std::sort(gens_.begin(), gens_.end(), canonical_less);
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.size() > caps.max_generators)
      throw CapExceeded("generator count " + std::to_string(gens_.size()) + " exceeds cap " +
                        std::to_string(caps.max_generators));
  }

  std::size_t ambient() const noexcept { return n_; }
  long degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  bool contains(const Monomial& m) const {
    return std::binary_search(gens_.begin(), gens_.end(), m, canonical_less);
  }

  // Position of m in canonical order, or size() if absent.
  std::size_t index_of(const Monomial& m) const {
    auto it = std::lower_bound(gens_.begin(), gens_.end(), m, canonical_less);
    if (it == gens_.end() || *it != m) return gens_.size();
    return static_cast<std::size_t>(it - gens_.begin());
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Monomial> gens_;
  std::size_t n_ = 0;
  long d_ = 0;
};

// Degree-d part of the smallest strongly stable ideal containing the seeds:
// closure under v -> x_i * (v / x_j) for j in supp(v) and i < j.
inline GeneratorSet borel_closure(const std::vector<Monomial>& seeds, std::size_t n, const Caps& caps = {}) {
  if (seeds.empty()) throw Error("borel_closure needs at least one seed");
  for (const auto& s : seeds) {
    if (s.ambient() != n) throw AmbientMismatch(n, s.ambient());
    if (s.degree() != seeds.front().degree()) throw DegreeMismatch(seeds.front().degree(), s.degree());
    check_caps(s, caps);
  }
  std::unordered_set<Monomial, MonomialHash> seen(seeds.begin(), seeds.end());
  std::deque<Monomial> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    const Monomial v = std::move(work.front());
    work.pop_front();
    std::vector<int> e = v.exponents();
    for (std::size_t j = 1; j < n; ++j) {
      if (e[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        --e[j];
        ++e[i];
        Monomial w(e);
        ++e[j];
        --e[i];
        if (seen.insert(w).second) {
          if (seen.size() > caps.max_generators)
            throw CapExceeded("Borel closure exceeds generator cap " + std::to_string(caps.max_generators));
          work.push_back(std::move(w));
        }
      }
    }
  }
  return GeneratorSet(std::vector<Monomial>(seen.begin(), seen.end()), caps);
}

inline GeneratorSet borel_closure(const Monomial& seed, const Caps& caps = {}) {
  return borel_closure(std::vector<Monomial>{seed}, seed.ambient(), caps);
}

// Parameters of I_{k,n,d}; a bound k > d is clamped to d.
struct VeroneseParams {
  int k_requested = 0;
  int k_effective = 0;
  int n = 0;
  int d = 0;
};

inline VeroneseParams veronese_params(int k, int n, int d) {
  if (k < 1 || n < 1 || d < 1) throw Error("Veronese parameters k, n, d must be positive");
  VeroneseParams p{k, std::min(k, d), n, d};
  // Nonempty with more than one generator iff sum of bounds exceeds d.
  if (static_cast<long>(p.k_effective) * n <= d)
    throw EmptyDomain("empty Veronese domain: min(k,d)*n = " +
                      std::to_string(static_cast<long>(p.k_effective) * n) + " <= d = " + std::to_string(d));
  return p;
}

namespace detail {

inline void enumerate_bounded(std::vector<int>& e, std::size_t pos, int remaining, int bound,
                              std::vector<Monomial>& out, const Caps& caps) {
  const std::size_t n = e.size();
  if (pos + 1 == n) {
    if (remaining <= bound) {
      e[pos] = remaining;
      out.emplace_back(e);
      if (out.size() > caps.max_generators)
        throw CapExceeded("Veronese set exceeds generator cap " + std::to_string(caps.max_generators));
    }
    return;
  }
  // Descending x_pos exponent yields canonical (largest-first) order.
  const long rest_capacity = static_cast<long>(bound) * static_cast<long>(n - pos - 1);
  for (int a = std::min(bound, remaining); a >= 0; --a) {
    if (remaining - a > rest_capacity) break;
    e[pos] = a;
    enumerate_bounded(e, pos + 1, remaining - a, bound, out, caps);
  }
  e[pos] = 0;
}

}  // namespace detail

// All degree-d monomials in n variables whose exponents are at most min(k, d).
inline GeneratorSet veronese_constant(int k, int n, int d, const Caps& caps = {}) {
  const VeroneseParams p = veronese_params(k, n, d);
  if (n > caps.max_vars || d > caps.max_degree)
    throw CapExceeded("Veronese parameters exceed caps");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::vector<Monomial> out;
  detail::enumerate_bounded(e, 0, d, p.k_effective, out, caps);
  return GeneratorSet(std::move(out), caps);
}

// sort(B x B) is contained in B x B. Equal pairs are fixed by sorting and are
// skipped.
inline bool is_sortable(const GeneratorSet& g) {
  const auto& gens = g.generators();
  std::unordered_set<Monomial, MonomialHash> members(gens.begin(), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto [a, b] = sort_pair(gens[i], gens[j]);
      if (!members.contains(a) || !members.contains(b)) return false;
    }
  }
  return true;
}

// Number of minimal generators of I^2. All products u*v have degree 2d, so
// no distinct product divides another; the distinct products are exactly
// G(I^2).
inline std::int64_t mu_square(const GeneratorSet& g) {
  const auto& gens = g.generators();
  std::unordered_set<Monomial, MonomialHash> products;
  products.reserve(gens.size() * (gens.size() + 1) / 2);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) products.insert(multiply(gens[i], gens[j]));
  return static_cast<std::int64_t>(products.size());
}

// Rank over Q of the matrix whose rows are the exponent vectors of G(I).
// For equigenerated monomial ideals this is the Krull dimension of the fiber
// cone. Bareiss fraction-free elimination keeps every entry an exact integer
// minor, so each division below is exact.
inline int analytic_spread(const GeneratorSet& g) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = g.size();
  const std::size_t cols = g.ambient();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = g[r][c];

  cpp_int previous_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / previous_pivot;
      a[r][c] = 0;
    }
    previous_pivot = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

struct LoadedGeneratorSet {
  GeneratorSet set;
  std::vector<std::string> warnings;
};

// Generator-set file: first non-comment line "n d", then one monomial per
// line in vector or symbolic syntax. Blank lines and lines starting with '#'
// are ignored. Duplicate monomials are dropped with a warning.
inline LoadedGeneratorSet read_generator_set(std::istream& in, const Caps& caps = {}) {
  std::string line;
  std::size_t line_no = 0;
  long n = -1, d = -1;
  std::vector<Monomial> gens;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<std::string> warnings;

  auto where = [&](const std::string& msg) { return "line " + std::to_string(line_no) + ": " + msg; };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (n < 0) {
      std::istringstream header(line);
      std::string extra;
      if (!(header >> n >> d) || (header >> extra)) throw Error(where("expected header 'n d'"));
      if (n < 1 || d < 1) throw Error(where("n and d must be positive"));
      if (n > caps.max_vars || d > caps.max_degree) throw CapExceeded(where("header exceeds caps"));
      continue;
    }
    Monomial m;
    try {
      m = parse_monomial(line, static_cast<std::size_t>(n), caps);
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.position(), where(line));
    }
    if (m.degree() != d)
      throw Error(where("generator " + to_string(m) + " has degree " + std::to_string(m.degree()) +
                        ", header says " + std::to_string(d)));
    if (!seen.insert(m).second) {
      warnings.push_back(where("duplicate generator " + to_string(m) + " ignored"));
      continue;
    }
    gens.push_back(std::move(m));
  }
  if (n < 0) throw Error("missing header 'n d'");
  if (gens.empty()) throw Error("generator file lists no monomials");
  return {GeneratorSet(std::move(gens), caps), std::move(warnings)};
}

}  // namespace freiman
