#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freiman/analysis.hpp"
#include "freiman/chordal.hpp"
#include "freiman/classify.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideals.hpp"

namespace freiman {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// {"n": vertex count, "labels": [...], "edges": [[i, j], ...]}
inline Json graph_to_json(const Graph& graph) {
  Json labels = Json::array();
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) labels.push_back(graph.label(v));
  Json edges = Json::array();
  for (auto [i, j] : graph.edges()) edges.push_back(Json::array({i, j}));
  return Json{{"n", graph.vertex_count()}, {"labels", std::move(labels)}, {"edges", std::move(edges)}};
}

inline Json vertices_to_json(const Graph& graph, const std::vector<std::size_t>& vertices) {
  Json out = Json::array();
  for (auto v : vertices) out.push_back(Json{{"index", v}, {"label", graph.label(v)}});
  return out;
}

inline Json verdict_to_json(const Graph& graph, const ChordalityVerdict& verdict) {
  Json j{{"chordal", verdict.chordal}};
  if (verdict.peo) j["peo"] = vertices_to_json(graph, *verdict.peo);
  if (verdict.chordless_cycle) j["cycle"] = vertices_to_json(graph, *verdict.chordless_cycle);
  return j;
}

inline Json prediction_to_json(const Verdict& v) {
  return Json{{"freiman", v.freiman_predicted},
              {"clause", v.clause},
              {"normalization", v.normalization.describe()}};
}

inline Json report_to_json(const GeneratorSet& g, const AnalysisReport& r, const Json& input,
                           const std::optional<Verdict>& prediction = std::nullopt) {
  Json gens = Json::array();
  for (const auto& m : g) gens.push_back(to_string(m));
  Json j{{"schema", kReportSchema},
         {"input", input},
         {"n", g.ambient()},
         {"d", g.degree()},
         {"generators", std::move(gens)},
         {"mu", r.mu},
         {"spread", r.spread},
         {"mu_square", r.mu_square},
         {"bound", r.bound},
         {"gap", r.gap},
         {"freiman", r.freiman},
         {"sortable", r.sortable}};
  j["chordal"] = (r.chordal && r.sorted) ? verdict_to_json(*r.sorted, *r.chordal) : Json(nullptr);
  j["sorted_graph"] = r.sorted ? graph_to_json(*r.sorted) : Json(nullptr);
  if (prediction) j["prediction"] = prediction_to_json(*prediction);
  return j;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join_labels(const Graph& graph, const std::vector<std::size_t>& vertices, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += sep;
    out += graph.label(vertices[i]);
  }
  return out;
}

inline void write_text_report(std::ostream& os, const GeneratorSet& g, const AnalysisReport& r,
                              const std::string& input, const std::optional<Verdict>& prediction = std::nullopt) {
  os << "input        " << input << "\n";
  os << "generators   " << g.size() << " (n=" << g.ambient() << ", d=" << g.degree() << ")\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  " << std::setw(4) << i << "  " << g[i] << "\n";
  os << "mu(I)        " << r.mu << "\n";
  os << "spread l(I)  " << r.spread << "\n";
  os << "mu(I^2)      " << r.mu_square << "\n";
  os << "bound        " << r.bound << "\n";
  os << "gap          " << r.gap << "\n";
  os << "freiman      " << yes_no(r.freiman) << "\n";
  os << "sortable     " << yes_no(r.sortable) << "\n";
  if (r.chordal && r.sorted) {
    os << "chordal      " << yes_no(r.chordal->chordal) << "\n";
    if (r.chordal->peo)
      os << "  peo        " << join_labels(*r.sorted, *r.chordal->peo, ", ") << "\n";
    if (r.chordal->chordless_cycle)
      os << "  cycle      " << join_labels(*r.sorted, *r.chordal->chordless_cycle, " - ") << " (length "
         << r.chordal->chordless_cycle->size() << ")\n";
    os << "sorted graph " << r.sorted->edge_count() << " edges\n";
    for (auto [i, j] : r.sorted->edges())
      os << "  " << r.sorted->label(i) << " -- " << r.sorted->label(j) << "\n";
  } else {
    os << "chordal      n/a (not sortable)\n";
  }
  if (prediction)
    os << "predicted    " << (prediction->freiman_predicted ? "freiman" : "not freiman") << " ["
       << prediction->clause << "], normalization: " << prediction->normalization.describe() << "\n";
}

inline constexpr const char* kSweepCsvHeader =
    "family,params,mu,spread,mu_square,bound,gap,freiman_computed,freiman_predicted,clause,chordal,agree";

inline std::string csv_bool(bool b) { return b ? "true" : "false"; }

inline void write_csv_row(std::ostream& os, const std::string& family, const std::string& params,
                          const AnalysisReport& r, const std::optional<Verdict>& prediction) {
  os << family << ',' << params << ',' << r.mu << ',' << r.spread << ',' << r.mu_square << ',' << r.bound << ','
     << r.gap << ',' << csv_bool(r.freiman) << ',';
  if (prediction) os << csv_bool(prediction->freiman_predicted) << ',' << prediction->clause << ',';
  else os << ",,";
  if (r.chordal) os << csv_bool(r.chordal->chordal);
  os << ',';
  const bool agree = r.sortable && r.chordal && r.gap >= 0 && r.chordal->chordal == r.freiman &&
                     (!prediction || prediction->freiman_predicted == r.freiman);
  os << csv_bool(agree) << '\n';
}

inline void write_sweep_csv(std::ostream& os, const SweepReport& report) {
  os << kSweepCsvHeader << '\n';
  for (const auto& row : report.rows) {
    os << to_string(row.family) << ',' << row.params << ',' << row.mu << ',' << row.spread << ','
       << row.mu_square << ',' << row.bound << ',' << row.gap << ',' << csv_bool(row.freiman_computed) << ','
       << csv_bool(row.freiman_predicted) << ',' << row.clause << ',';
    if (row.chordal) os << csv_bool(*row.chordal);
    os << ',' << csv_bool(row.agree) << '\n';
  }
}

inline Json summary_to_json(const SweepSummary& s) {
  return Json{{"points", s.points},
              {"agreements", s.agreements},
              {"disagreements", s.disagreements},
              {"inequality_violations", s.inequality_violations},
              {"sortability_violations", s.sortability_violations},
              {"certificate_failures", s.certificate_failures},
              {"skipped", s.skipped}};
}

inline Json sweep_to_json(const SweepReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json j{{"family", to_string(row.family)},
           {"params", row.params},
           {"mu", row.mu},
           {"spread", row.spread},
           {"mu_square", row.mu_square},
           {"bound", row.bound},
           {"gap", row.gap},
           {"freiman_computed", row.freiman_computed},
           {"freiman_predicted", row.freiman_predicted},
           {"clause", row.clause},
           {"chordal", row.chordal ? Json(*row.chordal) : Json(nullptr)},
           {"agree", row.agree}};
    if (row.certificate_cycle) j["cycle_length"] = row.certificate_cycle->size();
    rows.push_back(std::move(j));
  }
  return Json{{"schema", kReportSchema},
              {"family", to_string(report.family)},
              {"summary", summary_to_json(report.summary)},
              {"rows", std::move(rows)}};
}

inline void write_sweep_summary(std::ostream& os, const SweepReport& report) {
  const auto& s = report.summary;
  os << to_string(report.family) << " sweep: " << s.points << " points, " << s.agreements << " agree, "
     << s.disagreements << " disagree";
  if (s.skipped) os << ", " << s.skipped << " skipped (empty domain)";
  os << "\n";
  os << "  freiman inequality violations: " << s.inequality_violations << "\n";
  os << "  sortability violations:        " << s.sortability_violations << "\n";
  os << "  certificate failures:          " << s.certificate_failures << "\n";
}

inline void write_sweep_text(std::ostream& os, const SweepReport& report) {
  os << std::left << std::setw(28) << "params" << std::right << std::setw(6) << "mu" << std::setw(4) << "l"
     << std::setw(8) << "mu(I2)" << std::setw(6) << "gap" << "  computed predicted chordal  clause\n";
  for (const auto& row : report.rows) {
    os << std::left << std::setw(28) << row.params << std::right << std::setw(6) << row.mu << std::setw(4)
       << row.spread << std::setw(8) << row.mu_square << std::setw(6) << row.gap << "  " << std::left
       << std::setw(9) << yes_no(row.freiman_computed) << std::setw(10) << yes_no(row.freiman_predicted)
       << std::setw(9) << (row.chordal ? yes_no(*row.chordal) : "n/a") << row.clause
       << (row.agree ? "" : "  <-- DISAGREE") << std::right << "\n";
  }
  write_sweep_summary(os, report);
}

}  // namespace freiman
