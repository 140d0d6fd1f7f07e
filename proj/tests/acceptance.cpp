// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Known induced-cycle certificates are checked as an
// additional block.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "freiman/analysis.hpp"
#include "freiman/chordal.hpp"
#include "freiman/classify.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideals.hpp"
#include "freiman/io.hpp"
#include "oracles.hpp"

using namespace freiman;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits (seconds).
constexpr double kExampleLimit = 1.0;
constexpr double kSweepLimit = 600.0;
constexpr double kOracleLimit = 60.0;
constexpr std::size_t kRandomGraphs = 1000;
constexpr std::size_t kMaxOracleVertices = 12;
constexpr std::size_t kExtensionSamples = 50;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.require(false, "took " + std::to_string(secs) + "s, limit " + std::to_string(limit_seconds) + "s");
  }
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << std::fixed
            << std::setprecision(3) << secs << "s)\n";
  for (const auto& n : out.notes) std::cout << "         " << n << "\n";
  if (!out.pass) ++failures;
}

Monomial m(std::vector<int> e, std::size_t n) {
  e.resize(n, 0);
  return Monomial(std::move(e));
}

std::vector<oracle::Exps> rows_of(const GeneratorSet& g) {
  std::vector<oracle::Exps> out;
  for (const auto& x : g) out.push_back(x.exponents());
  return out;
}

// Shared sweep results (criteria 3-8 reuse them).
SweepReport borel_sweep, veronese_sweep;
double borel_seconds = 0, veronese_seconds = 0;
int borel_exit = -1, veronese_exit = -1;

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream os, es;
  const int code = cli::run(args, os, es);
  out = os.str();
  return code;
}

void ac1(Outcome& o) {
  std::string text;
  const int code = run_cli({"analyze", "borel", "--u", "x3^2", "--n", "3", "--format", "json"}, text);
  o.require(code == 0, "CLI exit 0");
  const Json j = Json::parse(text);
  const std::vector<std::string> gens{"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"};
  o.require(j["generators"] == Json(gens), "G(I) is exactly the six listed generators");

  std::set<std::pair<std::string, std::string>> expected{
      {"x1^2", "x1*x2"}, {"x1^2", "x1*x3"},  {"x1*x2", "x1*x3"}, {"x1*x2", "x2^2"}, {"x1*x2", "x2*x3"},
      {"x1*x3", "x2*x3"}, {"x1*x3", "x3^2"}, {"x2^2", "x2*x3"},  {"x2*x3", "x3^2"}};
  std::set<std::pair<std::string, std::string>> got;
  const auto& labels = j["sorted_graph"]["labels"];
  for (const auto& e : j["sorted_graph"]["edges"])
    got.emplace(labels[e[0].get<std::size_t>()].get<std::string>(), labels[e[1].get<std::size_t>()].get<std::string>());
  o.require(got == expected, "sorted graph has exactly the nine listed edges");
  o.require(j["mu"] == 6 && j["spread"] == 3 && j["mu_square"] == 15 && j["gap"] == 0,
            "mu=6, l=3, mu(I^2)=15, gap=0");
  o.require(j["freiman"] == true && j["chordal"]["chordal"] == true, "freiman=true, chordal=true");
}

void ac2(Outcome& o) {
  const GeneratorSet g = veronese_constant(2, 3, 3);
  const auto mu2_oracle = oracle::pairwise_sum_count(rows_of(g));
  const int rank_oracle = oracle::rational_rank(rows_of(g));
  const auto bound_oracle = freiman_bound(static_cast<std::int64_t>(g.size()), rank_oracle);
  o.require(mu2_oracle == 19 && bound_oracle == 18, "oracle: mu(I^2)=19 > bound 18");
  const AnalysisReport r = freiman_report(g);
  o.require(r.mu_square == 19 && r.bound == 18 && r.gap == 1, "report: mu(I^2)=19, bound=18, gap=1");
  o.require(!r.freiman, "freiman=false");
  const std::vector<Monomial> listed_cycle{m({1, 2}, 3), m({2, 1}, 3), m({2, 0, 1}, 3),
                                          m({1, 0, 2}, 3), m({0, 1, 2}, 3), m({0, 2, 1}, 3)};
  o.require(r.sorted && is_induced_cycle(*r.sorted, listed_cycle), "listed 6-cycle is induced");
  o.require(r.chordal && !r.chordal->chordal && r.chordal->chordless_cycle &&
                r.chordal->chordless_cycle->size() >= 4 && is_induced_cycle(*r.sorted, *r.chordal->chordless_cycle),
            "is_chordal returns a valid chordless cycle of length >= 4");
  if (r.chordal && r.chordal->chordless_cycle)
    o.note("extracted cycle length " + std::to_string(r.chordal->chordless_cycle->size()));
}

void report_disagreements(Outcome& o, const SweepReport& s) {
  for (const auto& row : s.rows)
    if (!row.agree)
      o.note("disagreement at " + row.params + ": computed=" + (row.freiman_computed ? "1" : "0") +
             " predicted=" + (row.freiman_predicted ? "1" : "0") + " clause=" + row.clause);
}

void ac3(Outcome& o) {
  std::string text;
  const auto start = Clock::now();
  borel_exit = run_cli({"sweep", "borel", "--n", "3..5", "--d", "2..5", "--format", "json"}, text);
  borel_sweep = sweep_borel({3, 5}, {2, 5});
  borel_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const Json j = Json::parse(text);
  o.require(borel_exit == 0, "sweep exit 0");
  o.require(j["summary"]["disagreements"] == 0, "CLI sweep reports zero disagreements");
  o.require(borel_sweep.summary.points == j["summary"]["points"].get<std::size_t>(), "library and CLI agree on points");
  o.require(borel_sweep.summary.agreements == borel_sweep.summary.points, "three-way agreement on 100% of points");
  report_disagreements(o, borel_sweep);
  o.note(std::to_string(borel_sweep.summary.points) + " points, " + std::to_string(borel_sweep.summary.agreements) +
         " agree");
}

void ac4(Outcome& o) {
  std::string text;
  const auto start = Clock::now();
  veronese_exit = run_cli({"sweep", "veronese", "--k", "1..3", "--n", "2..5", "--format", "json"}, text);
  veronese_sweep = sweep_veronese({1, 3}, {2, 5});
  veronese_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const Json j = Json::parse(text);
  o.require(veronese_exit == 0, "sweep exit 0");
  o.require(j["summary"]["disagreements"] == 0, "CLI sweep reports zero disagreements");
  o.require(veronese_sweep.summary.agreements == veronese_sweep.summary.points,
            "three-way agreement on 100% of points");
  // Every valid d from k to kn-1 is covered.
  std::size_t expected_points = 0;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 5; ++n) expected_points += static_cast<std::size_t>(k * n - k);
  o.require(veronese_sweep.summary.points == expected_points, "all valid d covered");
  report_disagreements(o, veronese_sweep);
  o.note(std::to_string(veronese_sweep.summary.points) + " points, " +
         std::to_string(veronese_sweep.summary.agreements) + " agree");
}

void ac5(Outcome& o) {
  std::size_t checked = 0, violations = 0;
  for (const auto* s : {&borel_sweep, &veronese_sweep})
    for (const auto& row : s->rows)
      if (row.sortable) {
        ++checked;
        if (row.gap < 0) ++violations;
      }
  o.require(checked == borel_sweep.rows.size() + veronese_sweep.rows.size(), "every instance sortable and checked");
  o.require(violations == 0, "zero inequality violations");
  o.note(std::to_string(checked) + " instances, " + std::to_string(violations) + " violations");
}

void ac6(Outcome& o) {
  std::size_t violations = 0;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 5; ++n)
      for (int d = k; d <= k * n - 1; ++d)
        if (!is_sortable(veronese_constant(k, n, d))) ++violations;
  for (int n = 3; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d)
      for (const auto& u : monomials_of_degree(n, d))
        if (!is_sortable(borel_closure(u))) ++violations;
  o.require(violations == 0, "zero sortability violations");
  o.require(borel_sweep.summary.sortability_violations == 0 && veronese_sweep.summary.sortability_violations == 0,
            "sweeps report zero sortability violations");
}

bool verdict_valid(const Graph& g, const ChordalityVerdict& v) {
  if (v.chordal) return v.peo && !v.chordless_cycle && check_peo(g, *v.peo).perfect;
  return v.chordless_cycle && !v.peo && v.chordless_cycle->size() >= 4 && is_induced_cycle(g, *v.chordless_cycle);
}

void ac7(Outcome& o) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(1, kMaxOracleVertices);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::size_t disagreements = 0, invalid = 0, graphs = 0, chordal_count = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const auto v = is_chordal(g);
    if (v.chordal) ++chordal_count;
    if (v.chordal == oracle::has_chordless_cycle(g)) ++disagreements;
    if (!verdict_valid(g, v)) ++invalid;
  };
  for (std::size_t i = 0; i < kRandomGraphs; ++i)
    check(i % 4 == 0 ? oracle::random_chordal_graph(rng, size(rng)) : oracle::random_graph(rng, size(rng), density(rng)));
  std::size_t sweep_graphs = 0;
  for (int n = 3; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d)
      for (const auto& u : monomials_of_degree(n, d)) {
        const auto g = borel_closure(u);
        if (g.size() <= kMaxOracleVertices) {
          check(sorted_graph(g));
          ++sweep_graphs;
        }
      }
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 5; ++n)
      for (int d = k; d <= k * n - 1; ++d) {
        const auto g = veronese_constant(k, n, d);
        if (g.size() <= kMaxOracleVertices) {
          check(sorted_graph(g));
          ++sweep_graphs;
        }
      }
  o.require(disagreements == 0, "is_chordal agrees with brute force");
  o.require(invalid == 0, "all certificates verify");
  o.note(std::to_string(graphs) + " graphs (" + std::to_string(sweep_graphs) + " from sweeps), " +
         std::to_string(chordal_count) + " chordal");
}

void ac8(Outcome& o) {
  std::size_t mismatches = 0, pairs = 0;
  for (int n = 3; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d)
      for (const auto& u : monomials_of_degree(n, d)) {
        const bool base = freiman_report(borel_closure(u)).freiman;
        for (int k = 1; k <= 3; ++k) {
          auto e = u.exponents();
          e[0] += k;
          ++pairs;
          if (freiman_report(borel_closure(Monomial(e))).freiman != base) ++mismatches;
        }
      }
  o.require(mismatches == 0, "freiman(B(v)) = freiman(B(x1^k v)), k=1..3");
  o.note(std::to_string(pairs) + " (v, k) pairs, " + std::to_string(mismatches) + " mismatches");

  // u -> u * x_{n+1}: the sorted graph of the image is the same graph.
  std::vector<GeneratorSet> pool;
  for (int n = 3; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d)
      for (const auto& u : monomials_of_degree(n, d)) pool.push_back(borel_closure(u));
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 5; ++n)
      for (int d = k; d <= k * n - 1; ++d) pool.push_back(veronese_constant(k, n, d));
  std::mt19937 rng(8);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t iso_failures = 0, non_freiman = 0;
  for (std::size_t s = 0; s < kExtensionSamples; ++s) {
    const GeneratorSet& g = pool[s];
    const std::size_t n1 = g.ambient() + 1;
    std::vector<Monomial> image;
    for (const auto& x : g) {
      auto e = x.widened(n1).exponents();
      e.back() = 1;
      image.emplace_back(e);
    }
    const GeneratorSet h(image);
    const Graph gs = sorted_graph(g), hs = sorted_graph(h);
    bool iso = h.size() == g.size();
    for (std::size_t i = 0; iso && i < g.size(); ++i)
      for (std::size_t j = i + 1; iso && j < g.size(); ++j)
        iso = gs.adjacent(i, j) == hs.adjacent(h.index_of(image[i]), h.index_of(image[j]));
    if (!iso) ++iso_failures;
    // A chordless cycle of the original maps to one of the image.
    const auto v = is_chordal(gs);
    if (!v.chordal) {
      ++non_freiman;
      std::vector<Monomial> lifted;
      for (auto idx : *v.chordless_cycle) lifted.push_back(image[idx]);
      if (!is_induced_cycle(hs, lifted)) ++iso_failures;
    }
  }
  o.require(iso_failures == 0, "u -> u*x_{n+1} preserves the sorted graph on 50 samples");
  o.note(std::to_string(kExtensionSamples) + " samples (" + std::to_string(non_freiman) +
         " non-Freiman, cycles lifted)");

  // Lifting along the k=2 induction: a chordless cycle of I_{2,n-1,2n-4}
  // times x_n (resp. x_n^2) stays induced in I_{2,n,2n-3} (resp. I_{2,n,2n-2}).
  for (int n = 5; n <= 6; ++n) {
    const Graph base = sorted_graph(veronese_constant(2, n - 1, 2 * n - 4));
    const auto v = is_chordal(base);
    o.require(!v.chordal, "I_{2," + std::to_string(n - 1) + "," + std::to_string(2 * n - 4) + "} not chordal");
    if (v.chordal) continue;
    for (int power = 1; power <= 2; ++power) {
      std::vector<Monomial> lifted;
      for (auto idx : *v.chordless_cycle) {
        auto e = base.labels()[idx].widened(static_cast<std::size_t>(n)).exponents();
        e.back() = power;
        lifted.emplace_back(e);
      }
      const Graph target = sorted_graph(veronese_constant(2, n, 2 * n - 4 + power));
      o.require(is_induced_cycle(target, lifted), "lifted cycle induced in I_{2," + std::to_string(n) + "," +
                                                      std::to_string(2 * n - 4 + power) + "}");
    }
  }
}

// Explicit induced cycles witnessing each non-Freiman family.
void certificates(Outcome& o) {
  std::size_t checked = 0;
  auto expect_cycle = [&](const GeneratorSet& g, const std::vector<Monomial>& cycle, const std::string& what) {
    ++checked;
    o.require(is_induced_cycle(sorted_graph(g), cycle), what);
  };

  // Principal Borel, d = 3: u in x2(x3..xn)^2 or (x3..xn)^3.
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& u : monomials_of_degree(static_cast<int>(n), 3)) {
      const bool case_iii = u[0] == 0 && u[1] == 1;
      const bool case_iv = u[0] == 0 && u[1] == 0;
      if (!case_iii && !case_iv) continue;
      expect_cycle(borel_closure(u),
                   {m({1, 2}, n), m({2, 1}, n), m({2, 0, 1}, n), m({1, 0, 2}, n), m({0, 1, 2}, n), m({0, 2, 1}, n)},
                   "B(" + to_string(u) + ") 6-cycle");
    }
  // Principal Borel, d >= 4: x1-free u with x2-exponent <= d-2.
  for (int d = 4; d <= 6; ++d)
    for (std::size_t n = 3; n <= 5; ++n)
      for (const auto& u : monomials_of_degree(static_cast<int>(n), d)) {
        if (u[0] != 0 || u[1] > d - 2) continue;
        expect_cycle(borel_closure(u),
                     {m({d - 2, 2}, n), m({d - 1, 1}, n), m({d - 1, 0, 1}, n), m({d - 2, 0, 2}, n),
                      m({d - 3, 1, 2}, n), m({d - 3, 2, 1}, n)},
                     "B(" + to_string(u) + ") 6-cycle");
      }
  // k = 1: base * {x_{n-3}x_{n-2}, x_{n-3}x_n, x_{n-1}x_n, x_{n-2}x_{n-1}},
  // base = x_{n-d-1} ... x_{n-4}.
  for (int n = 4; n <= 7; ++n)
    for (int d = 2; d <= n - 2; ++d) {
      std::vector<int> base(static_cast<std::size_t>(n), 0);
      for (int j = 4; j <= d + 1; ++j) base[static_cast<std::size_t>(n - j - 1)] = 1;
      auto with = [&](int a, int b) {
        auto e = base;
        e[static_cast<std::size_t>(a - 1)]++;
        e[static_cast<std::size_t>(b - 1)]++;
        return Monomial(e);
      };
      expect_cycle(veronese_constant(1, n, d), {with(n - 3, n - 2), with(n - 3, n), with(n - 1, n), with(n - 2, n - 1)},
                   "I_{1," + std::to_string(n) + "," + std::to_string(d) + "} 4-cycle");
    }
  // k = 2, n = 3, d = 3.
  expect_cycle(veronese_constant(2, 3, 3),
               {m({1, 2}, 3), m({2, 1}, 3), m({2, 0, 1}, 3), m({1, 0, 2}, 3), m({0, 1, 2}, 3), m({0, 2, 1}, 3)},
               "I_{2,3,3} 6-cycle");
  // k = 2, n = 4, d = 2..6. For d = 5, 6 the natural guess x1*x2^2*x3^3(*x4)
  // exceeds the bound; x3^2 is the vertex that closes the cycle.
  const std::vector<std::vector<std::vector<int>>> k2n4{
      {{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}},
      {{2, 1, 0, 0}, {2, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 0}},
      {{2, 2, 0, 0}, {2, 1, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 0}},
      {{2, 2, 1, 0}, {2, 1, 1, 1}, {1, 1, 2, 1}, {1, 2, 2, 0}},
      {{2, 2, 1, 1}, {2, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 1}}};
  for (int d = 2; d <= 6; ++d) {
    std::vector<Monomial> cyc;
    for (const auto& e : k2n4[static_cast<std::size_t>(d - 2)]) cyc.emplace_back(e);
    expect_cycle(veronese_constant(2, 4, d), cyc, "I_{2,4," + std::to_string(d) + "} 4-cycle");
  }
  for (const auto& literal : {std::pair{5, std::vector<int>{1, 2, 3, 0}}, std::pair{6, std::vector<int>{1, 2, 3, 1}}}) {
    const auto g = veronese_constant(2, 4, literal.first);
    const Monomial guess(literal.second);
    if (!g.contains(guess))
      o.note("I_{2,4," + std::to_string(literal.first) + "}: " + to_string(guess) +
             " is not a generator; cycle closes with x3^2");
  }
  // k >= 3, n = 3.
  for (int k = 3; k <= 5; ++k) {
    for (int d = k + 1; d <= 2 * k - 1; ++d)
      expect_cycle(veronese_constant(k, 3, d),
                   {m({k - 1, d - k + 1}, 3), m({k, d - k}, 3), m({k, d - k - 1, 1}, 3), m({k - 1, d - k - 1, 2}, 3),
                    m({k - 2, d - k, 2}, 3), m({k - 2, d - k + 1, 1}, 3)},
                   "I_{" + std::to_string(k) + ",3," + std::to_string(d) + "} 6-cycle");
    for (int d = 2 * k; d <= 3 * k - 3; ++d)
      expect_cycle(veronese_constant(k, 3, d),
                   {m({k - 1, k, d - 2 * k + 1}, 3), m({k, k - 1, d - 2 * k + 1}, 3), m({k, k - 2, d - 2 * k + 2}, 3),
                    m({k - 1, k - 2, d - 2 * k + 3}, 3), m({k - 2, k - 1, d - 2 * k + 3}, 3),
                    m({k - 2, k, d - 2 * k + 2}, 3)},
                   "I_{" + std::to_string(k) + ",3," + std::to_string(d) + "} 6-cycle");
  }
  // k >= 3, n >= 4: k+1 <= d <= kn-2.
  for (int k = 3; k <= 4; ++k)
    for (std::size_t n = 4; n <= 6; ++n)
      for (int d = k + 1; d <= k * static_cast<int>(n) - 2; ++d) {
        std::vector<Monomial> cyc;
        if (d <= 2 * k) {
          cyc = {m({k, d - k}, n), m({k, d - k - 1, 0, 1}, n), m({k - 1, d - k - 1, 1, 1}, n), m({k - 1, d - k, 1}, n)};
        } else if (d <= 3 * k - 1) {
          cyc = {m({k, k, d - 2 * k}, n), m({k, k - 1, d - 2 * k, 1}, n), m({k - 1, k - 1, d - 2 * k + 1, 1}, n),
                 m({k - 1, k, d - 2 * k + 1}, n)};
        } else if (d <= 4 * k - 2) {
          cyc = {m({k, k, k - 1, d - 3 * k + 1}, n), m({k, k - 1, k - 1, d - 3 * k + 2}, n),
                 m({k - 1, k - 1, k, d - 3 * k + 2}, n), m({k - 1, k, k, d - 3 * k + 1}, n)};
        } else {
          int mm = 5;
          while (!((mm - 1) * k - 1 <= d && d <= mm * k - 2)) ++mm;
          auto vertex = [&](std::vector<int> head) {
            for (int j = 5; j <= mm - 1; ++j) head.push_back(k);
            head.push_back(d - (mm - 1) * k + 2);
            return m(head, n);
          };
          cyc = {vertex({k, k, k - 1, k - 1}), vertex({k, k - 1, k - 1, k}), vertex({k - 1, k - 1, k, k}),
                 vertex({k - 1, k, k, k - 1})};
        }
        expect_cycle(veronese_constant(k, static_cast<int>(n), d), cyc,
                     "I_{" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(d) + "} 4-cycle");
      }
  o.note(std::to_string(checked) + " listed cycles verified");
}

}  // namespace

int main() {
  std::cout << "Freiman acceptance suite\n";
  criterion("AC1", "example B(x3^2): generators, 9-edge sorted graph, counts", kExampleLimit, ac1);
  criterion("AC2", "I_{2,3,3}: 19 > 18, listed 6-cycle, chordless certificate", kExampleLimit, ac2);
  criterion("AC3", "Borel sweep n=3..5, d=2..5: three-way agreement", kSweepLimit, ac3);
  criterion("AC4", "Veronese sweep k=1..3, n=2..5, all d: three-way agreement", kSweepLimit, ac4);
  criterion("AC5", "Freiman inequality gap >= 0 on all sweep instances", 0, ac5);
  criterion("AC6", "sortability of every swept Borel and Veronese set", 0, ac6);
  criterion("AC7", "chordality vs brute-force oracle, certificates verify", kOracleLimit, ac7);
  criterion("AC8", "x1-multiplication reduction and variable-extension isomorphism", 0, ac8);
  criterion("CERT", "explicit induced-cycle certificates", 0, certificates);
  std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criterion(s) failed\n");
  return failures == 0 ? 0 : 1;
}
