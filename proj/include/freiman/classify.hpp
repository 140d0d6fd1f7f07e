#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "freiman/analysis.hpp"
#include "freiman/chordal.hpp"
#include "freiman/error.hpp"
#include "freiman/ideals.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

// Reductions applied before matching a classification clause. For principal Borel
// ideals the x1-power of u is recorded (freiman(B(v)) = freiman(B(x1^k v)))
// but clauses are matched against u as given. For Veronese ideals the bound
// k is clamped to d.
struct Normalization {
  int x1_power = 0;
  std::optional<Monomial> reduced;
  int k_requested = 0;
  int k_effective = 0;

  std::string describe() const {
    if (reduced) {
      if (x1_power == 0) return "none";
      return "x1^" + std::to_string(x1_power) + " stripped: B(" + to_string(*reduced) + ")";
    }
    if (k_requested != k_effective)
      return "k clamped " + std::to_string(k_requested) + " -> " + std::to_string(k_effective);
    return "none";
  }
};

struct Verdict {
  bool freiman_predicted = false;
  std::string clause;
  Normalization normalization;
};

// Classification of principal Borel ideals B(u), u of degree d in n
// variables. Clause ids:
//   borel.trivial.d1 / borel.trivial.n2  outside the classification, always Freiman
//   borel.d2.a1  u in G((x1,x2,x3)^2)       borel.d2.a2  u in x1(x4..xn)
//   borel.d2.a3  u in x2(x4..xn)
//   borel.d3.b1  u in G(x1(x1,x2,x3)^2)     borel.d3.b2  u in x1(x1,x2)x_i, i>3
//   borel.d3.b3  u in x2^2(x2..xn)
//   borel.d4.c1  u = x1^(d-2) x3^2          borel.d4.c2  u in x1^(d-1)(x1..xn)
//   borel.d4.c3  u in x1^(d-r-1) x2^r (x2..xn), 1 <= r <= d-1
//   borel.dK.complement  none of the above for that degree class (not Freiman)
inline Verdict predicted_borel(const Monomial& u, std::size_t n) {
  if (u.ambient() != n) throw AmbientMismatch(n, u.ambient());
  const long d = u.degree();
  if (d < 1) throw Error("principal Borel ideal needs a generator of positive degree");

  Verdict v;
  v.normalization.x1_power = u[0];
  {
    std::vector<int> e = u.exponents();
    e[0] = 0;
    v.normalization.reduced = Monomial(std::move(e));
  }
  auto set = [&](bool freiman, const char* clause) {
    v.freiman_predicted = freiman;
    v.clause = clause;
    return v;
  };

  if (d == 1) return set(true, "borel.trivial.d1");
  if (n <= 2) return set(true, "borel.trivial.n2");

  // Factor word: 1-based variable indices in non-decreasing order.
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < n; ++i) word.insert(word.end(), static_cast<std::size_t>(u[i]), i + 1);

  if (d == 2) {
    const auto i = word[0], j = word[1];
    if (j <= 3) return set(true, "borel.d2.a1");
    if (i == 1) return set(true, "borel.d2.a2");
    if (i == 2) return set(true, "borel.d2.a3");
    return set(false, "borel.d2.complement");
  }
  if (d == 3) {
    if (word[0] == 1 && word[2] <= 3) return set(true, "borel.d3.b1");
    if (word[0] == 1 && word[1] <= 2) return set(true, "borel.d3.b2");
    if (word[0] == 2 && word[1] == 2) return set(true, "borel.d3.b3");
    return set(false, "borel.d3.complement");
  }
  const long e1 = u[0], e2 = u[1], e3 = u[2];
  if (e1 == d - 2 && e3 == 2) return set(true, "borel.d4.c1");
  if (e1 >= d - 1) return set(true, "borel.d4.c2");
  // x1^(d-r-1) x2^r x_j with j >= 2: everything but the last factor is x1 or
  // x2, with at least one x2.
  if (e1 <= d - 2 && e1 + e2 >= d - 1) return set(true, "borel.d4.c3");
  return set(false, "borel.d4.complement");
}

// Classification of I_{k,n,d} with k replaced by min(k, d). Clause ids:
//   veronese.k1.a  n=2, d=1          veronese.k1.b  n>=3, d=1 or d=n-1
//   veronese.k2.a  n=2, d=2,3        veronese.k2.b  n=3, d=2,4,5
//   veronese.k2.c  n>=4, d=2n-1
//   veronese.kge3.a  n=2, k<=d<=2k-1  veronese.kge3.b  n=3, d=3k-2,3k-1
//   veronese.kge3.c  n>=4, d=kn-1
// and "<family>.<case>.complement" (or veronese.k1.complement) otherwise.
inline Verdict predicted_veronese(int k, int n, int d) {
  const VeroneseParams p = veronese_params(k, n, d);
  const int ke = p.k_effective;
  Verdict v;
  v.normalization.k_requested = p.k_requested;
  v.normalization.k_effective = ke;
  auto set = [&](bool freiman, std::string clause) {
    v.freiman_predicted = freiman;
    v.clause = std::move(clause);
    return v;
  };

  if (ke == 1) {
    if (n == 2 && d == 1) return set(true, "veronese.k1.a");
    if (n >= 3 && (d == 1 || d == n - 1)) return set(true, "veronese.k1.b");
    return set(false, "veronese.k1.complement");
  }
  const std::string family = ke == 2 ? "veronese.k2" : "veronese.kge3";
  if (n == 2) {
    const bool hit = ke == 2 ? (d == 2 || d == 3) : (ke <= d && d <= 2 * ke - 1);
    return hit ? set(true, family + ".a") : set(false, family + ".a.complement");
  }
  if (n == 3) {
    const bool hit = ke == 2 ? (d == 2 || d == 4 || d == 5) : (d == 3 * ke - 2 || d == 3 * ke - 1);
    return hit ? set(true, family + ".b") : set(false, family + ".b.complement");
  }
  return d == ke * n - 1 ? set(true, family + ".c") : set(false, family + ".c.complement");
}

enum class Family { borel, veronese };

inline const char* to_string(Family f) { return f == Family::borel ? "borel" : "veronese"; }

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct SweepRow {
  Family family = Family::borel;
  std::string params;
  int n = 0;
  int d = 0;
  int k = 0;                       // veronese only (requested bound)
  std::optional<Monomial> u;       // borel only
  std::int64_t mu = 0;
  int spread = 0;
  std::int64_t mu_square = 0;
  std::int64_t bound = 0;
  std::int64_t gap = 0;
  bool freiman_computed = false;
  bool freiman_predicted = false;
  std::string clause;
  bool sortable = false;
  std::optional<bool> chordal;
  std::optional<std::vector<std::size_t>> certificate_cycle;
  bool certificate_valid = false;
  bool agree = false;
};

struct SweepSummary {
  std::size_t points = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t inequality_violations = 0;
  std::size_t sortability_violations = 0;
  std::size_t certificate_failures = 0;
  std::size_t skipped = 0;  // requested points with an empty Veronese domain
};

struct SweepReport {
  Family family = Family::borel;
  std::vector<SweepRow> rows;
  SweepSummary summary;

  bool ok() const noexcept {
    return summary.disagreements == 0 && summary.inequality_violations == 0 &&
           summary.sortability_violations == 0 && summary.certificate_failures == 0;
  }
};

struct SweepOptions {
  unsigned threads = 1;
  Caps caps{};
};

namespace detail {

// Runs `task(i)` for i in [0, count) on up to `threads` workers. Each task
// writes only its own slot, so results do not depend on scheduling.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline void check_range(const IntRange& r, const char* what) {
  if (r.lo > r.hi) throw Error(std::string("empty range for ") + what);
}

inline void evaluate_point(SweepRow& row, const GeneratorSet& g, const Verdict& verdict) {
  const AnalysisReport r = freiman_report(g);
  row.mu = r.mu;
  row.spread = r.spread;
  row.mu_square = r.mu_square;
  row.bound = r.bound;
  row.gap = r.gap;
  row.freiman_computed = r.freiman;
  row.freiman_predicted = verdict.freiman_predicted;
  row.clause = verdict.clause;
  row.sortable = r.sortable;
  if (r.chordal) {
    row.chordal = r.chordal->chordal;
    if (r.chordal->chordal) {
      row.certificate_valid = r.chordal->peo && check_peo(*r.sorted, *r.chordal->peo).perfect;
    } else {
      row.certificate_cycle = r.chordal->chordless_cycle;
      row.certificate_valid = r.chordal->chordless_cycle && r.chordal->chordless_cycle->size() >= 4 &&
                              is_induced_cycle(*r.sorted, *r.chordal->chordless_cycle);
    }
  }
  row.agree = row.sortable && row.chordal && row.gap >= 0 && *row.chordal == row.freiman_computed &&
              row.freiman_predicted == row.freiman_computed;
}

inline void summarize(SweepReport& report) {
  SweepSummary& s = report.summary;
  s.points = report.rows.size();
  for (const auto& row : report.rows) {
    if (row.agree) ++s.agreements; else ++s.disagreements;
    if (row.gap < 0) ++s.inequality_violations;
    if (!row.sortable) ++s.sortability_violations;
    if (row.sortable && !row.certificate_valid) ++s.certificate_failures;
  }
}

inline void enumerate_degree(std::vector<int>& e, std::size_t pos, int remaining, std::vector<Monomial>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    out.emplace_back(e);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    e[pos] = a;
    enumerate_degree(e, pos + 1, remaining - a, out);
  }
  e[pos] = 0;
}

}  // namespace detail

// All degree-d monomials in n variables, canonical (largest-first) order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1 || d < 0) throw Error("monomials_of_degree needs n >= 1 and d >= 0");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::vector<Monomial> out;
  detail::enumerate_degree(e, 0, d, out);
  return out;
}

// Every principal Borel ideal B(u), u of degree d in n variables, for n and d
// in the given inclusive ranges. Rows are in (n, d, canonical u) order.
inline SweepReport sweep_borel(IntRange n_range, IntRange d_range, const SweepOptions& opt = {}) {
  detail::check_range(n_range, "n");
  detail::check_range(d_range, "d");
  if (n_range.lo < 1 || d_range.lo < 1) throw Error("Borel sweep needs n >= 1 and d >= 1");
  if (n_range.hi > opt.caps.max_vars || d_range.hi > opt.caps.max_degree)
    throw CapExceeded("Borel sweep bounds exceed caps");

  SweepReport report;
  report.family = Family::borel;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int d = d_range.lo; d <= d_range.hi; ++d) {
      for (auto& u : monomials_of_degree(n, d)) {
        SweepRow row;
        row.family = Family::borel;
        row.n = n;
        row.d = d;
        row.params = "n=" + std::to_string(n) + ";d=" + std::to_string(d) + ";u=" + to_string(u);
        row.u = std::move(u);
        report.rows.push_back(std::move(row));
        if (report.rows.size() > opt.caps.max_sweep_points)
          throw CapExceeded("Borel sweep exceeds point cap " + std::to_string(opt.caps.max_sweep_points));
      }
    }
  }
  detail::parallel_for(report.rows.size(), opt.threads, [&](std::size_t i) {
    SweepRow& row = report.rows[i];
    const GeneratorSet g = borel_closure(*row.u, opt.caps);
    detail::evaluate_point(row, g, predicted_borel(*row.u, static_cast<std::size_t>(row.n)));
  });
  detail::summarize(report);
  return report;
}

// Every I_{k,n,d} over the ranges. Without a d range, d runs over
// k..kn-1, i.e. every d >= k with a nonempty domain. With an explicit d
// range, points whose domain is empty are skipped and counted.
inline SweepReport sweep_veronese(IntRange k_range, IntRange n_range, std::optional<IntRange> d_range = std::nullopt,
                                  const SweepOptions& opt = {}) {
  detail::check_range(k_range, "k");
  detail::check_range(n_range, "n");
  if (d_range) detail::check_range(*d_range, "d");
  if (k_range.lo < 1 || n_range.lo < 1 || (d_range && d_range->lo < 1))
    throw Error("Veronese sweep needs positive k, n, d");
  if (n_range.hi > opt.caps.max_vars) throw CapExceeded("Veronese sweep bounds exceed caps");
  if (d_range ? d_range->hi > opt.caps.max_degree
              : static_cast<long>(k_range.hi) * n_range.hi - 1 > opt.caps.max_degree)
    throw CapExceeded("Veronese sweep degrees exceed caps");

  SweepReport report;
  report.family = Family::veronese;
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      const int lo = d_range ? d_range->lo : k;
      const int hi = d_range ? d_range->hi : k * n - 1;
      for (int d = lo; d <= hi; ++d) {
        if (static_cast<long>(std::min(k, d)) * n <= d) {
          ++report.summary.skipped;
          continue;
        }
        SweepRow row;
        row.family = Family::veronese;
        row.k = k;
        row.n = n;
        row.d = d;
        row.params = "k=" + std::to_string(k) + ";n=" + std::to_string(n) + ";d=" + std::to_string(d);
        report.rows.push_back(std::move(row));
        if (report.rows.size() > opt.caps.max_sweep_points)
          throw CapExceeded("Veronese sweep exceeds point cap " + std::to_string(opt.caps.max_sweep_points));
      }
    }
  }
  detail::parallel_for(report.rows.size(), opt.threads, [&](std::size_t i) {
    SweepRow& row = report.rows[i];
    const GeneratorSet g = veronese_constant(row.k, row.n, row.d, opt.caps);
    detail::evaluate_point(row, g, predicted_veronese(row.k, row.n, row.d));
  });
  const std::size_t skipped = report.summary.skipped;
  detail::summarize(report);
  report.summary.skipped = skipped;
  return report;
}

}  // namespace freiman
