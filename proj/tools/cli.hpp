#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "freiman/analysis.hpp"
#include "freiman/classify.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideals.hpp"
#include "freiman/io.hpp"
#include "freiman/monomial.hpp"

namespace freiman::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2 };

class UsageError : public Error {
 public:
  using Error::Error;
};

// "a..b" (inclusive) or a single integer.
inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid range '" + text + "'");
    }
    if (used != s.size()) throw UsageError("invalid range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

struct SourceArgs {
  std::string u;
  int n = 0;
  int k = 0;
  int d = 0;
  std::string file;
};

struct Source {
  GeneratorSet set;
  Json echo;
  std::string description;
  std::string family;
  std::string params;
  std::optional<Verdict> prediction;
};

struct Options {
  std::string format = "text";
  std::string out;
  std::string dot;
  std::string graph_kind = "sorted";
  unsigned threads = 0;
  SourceArgs source;
  std::string n_range, d_range, k_range;
};

inline Source load_borel(const SourceArgs& a, std::ostream&) {
  if (a.n < 1) throw UsageError("--n must be positive");
  const Monomial u = parse_monomial(a.u, static_cast<std::size_t>(a.n));
  if (u.degree() < 1) throw UsageError("--u must have positive degree");
  Source s{borel_closure(u), Json{{"family", "borel"}, {"u", to_string(u)}, {"n", a.n}},
           "borel u=" + to_string(u) + " n=" + std::to_string(a.n), "borel",
           "n=" + std::to_string(a.n) + ";d=" + std::to_string(u.degree()) + ";u=" + to_string(u),
           predicted_borel(u, static_cast<std::size_t>(a.n))};
  return s;
}

inline Source load_veronese(const SourceArgs& a, std::ostream&) {
  const VeroneseParams p = veronese_params(a.k, a.n, a.d);
  Source s{veronese_constant(a.k, a.n, a.d),
           Json{{"family", "veronese"}, {"k", p.k_requested}, {"k_effective", p.k_effective}, {"n", a.n}, {"d", a.d}},
           "veronese k=" + std::to_string(a.k) + " n=" + std::to_string(a.n) + " d=" + std::to_string(a.d),
           "veronese",
           "k=" + std::to_string(a.k) + ";n=" + std::to_string(a.n) + ";d=" + std::to_string(a.d),
           predicted_veronese(a.k, a.n, a.d)};
  return s;
}

inline Source load_set(const SourceArgs& a, std::ostream& err) {
  std::ifstream in(a.file);
  if (!in) throw Error("cannot read generator file '" + a.file + "'");
  LoadedGeneratorSet loaded = read_generator_set(in);
  for (const auto& w : loaded.warnings) err << "warning: " << a.file << ": " << w << "\n";
  return Source{std::move(loaded.set), Json{{"family", "set"}, {"file", a.file}}, "set file=" + a.file, "set",
                "file=" + a.file, std::nullopt};
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

inline int do_analyze(const Source& src, const Options& opt, std::ostream& out) {
  const AnalysisReport r = freiman_report(src.set);
  if (!opt.dot.empty()) write_file(opt.dot, to_dot(r.sorted ? *r.sorted : sorted_graph(src.set)));
  OutputSink sink(opt.out, out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") {
    os << report_to_json(src.set, r, src.echo, src.prediction).dump(2) << "\n";
  } else if (opt.format == "csv") {
    os << kSweepCsvHeader << "\n";
    write_csv_row(os, src.family, src.params, r, src.prediction);
  } else if (opt.format == "dot") {
    write_dot(os, r.sorted ? *r.sorted : sorted_graph(src.set));
  } else {
    write_text_report(os, src.set, r, src.description, src.prediction);
  }
  return kOk;
}

inline int do_export(const Source& src, const Options& opt, std::ostream& out) {
  const Graph sorted = sorted_graph(src.set);
  const Graph graph = opt.graph_kind == "unsorted" ? sorted.complement() : sorted;
  const std::string name = opt.graph_kind + "_graph";
  const std::string body = opt.format == "json" ? graph_to_json(graph).dump(2) + "\n" : to_dot(graph, name);
  if (!opt.dot.empty()) write_file(opt.dot, opt.format == "json" ? to_dot(graph, name) : body);
  if (opt.dot.empty() || !opt.out.empty() || opt.format == "json") {
    OutputSink sink(opt.out, out);
    sink.stream() << body;
  }
  return kOk;
}

inline int do_sweep(const SweepReport& report, const Options& opt, std::ostream& out, std::ostream& err) {
  OutputSink sink(opt.out, out);
  std::ostream& os = sink.stream();
  if (opt.format == "json") os << sweep_to_json(report).dump(2) << "\n";
  else if (opt.format == "csv") write_sweep_csv(os, report);
  else write_sweep_text(os, report);
  if (opt.format != "text") write_sweep_summary(err, report);
  if (!report.ok()) {
    err << "error: sweep found " << report.summary.disagreements << " disagreeing point(s)\n";
    return kDisagreement;
  }
  return kOk;
}

inline unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Adds the borel / veronese / set input subcommands under `parent`.
inline void add_sources(CLI::App* parent, SourceArgs& a) {
  auto* borel = parent->add_subcommand("borel", "principal Borel ideal B(u)");
  borel->add_option("--u", a.u, "generator u, e.g. x1*x3^2 or '1 0 2'")->required();
  borel->add_option("--n", a.n, "number of variables")->required();
  auto* ver = parent->add_subcommand("veronese", "Veronese-type ideal I_{k,n,d} with constant bound k");
  ver->add_option("--k", a.k, "exponent bound")->required();
  ver->add_option("--n", a.n, "number of variables")->required();
  ver->add_option("--d", a.d, "degree")->required();
  auto* set = parent->add_subcommand("set", "generators read from a file");
  set->add_option("--file", a.file, "generator file: header 'n d', one monomial per line")->required();
  for (auto* sub : {borel, ver, set}) sub->fallthrough();
  parent->require_subcommand(1);
}

inline Source load_source(CLI::App* parent, const SourceArgs& a, std::ostream& err) {
  if (parent->got_subcommand("borel")) return load_borel(a, err);
  if (parent->got_subcommand("veronese")) return load_veronese(a, err);
  return load_set(a, err);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freiman property of equigenerated monomial ideals"};
  app.name("freiman");
  Options opt;

  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--out", opt.out, "write output to this path instead of stdout");
  app.add_option("--threads", opt.threads, "sweep worker threads (0 = hardware concurrency)");
  app.add_option("--dot", opt.dot, "also write the sorted graph as DOT to this path");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze one ideal");
  add_sources(analyze, opt.source);

  auto* exp = app.add_subcommand("export", "export the sorted (or unsorted) graph of one ideal");
  exp->add_option("--graph", opt.graph_kind, "which graph")->check(CLI::IsMember({"sorted", "unsorted"}));
  add_sources(exp, opt.source);

  auto* sweep = app.add_subcommand("sweep", "cross-check a classification over parameter ranges");
  auto* sweep_borel_cmd = sweep->add_subcommand("borel", "all B(u), deg u = d, in n variables");
  sweep_borel_cmd->add_option("--n", opt.n_range, "range a..b")->required();
  sweep_borel_cmd->add_option("--d", opt.d_range, "range a..b")->required();
  auto* sweep_ver_cmd = sweep->add_subcommand("veronese", "all I_{k,n,d}");
  sweep_ver_cmd->add_option("--k", opt.k_range, "range a..b")->required();
  sweep_ver_cmd->add_option("--n", opt.n_range, "range a..b")->required();
  sweep_ver_cmd->add_option("--d", opt.d_range, "range a..b (default: k..kn-1)");
  sweep->require_subcommand(1);

  for (auto* sub : {analyze, exp, sweep, sweep_borel_cmd, sweep_ver_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (analyze->parsed()) {
      return do_analyze(load_source(analyze, opt.source, err), opt, out);
    }
    if (exp->parsed()) {
      if (opt.format != "dot" && opt.format != "json" && opt.format != "text")
        throw UsageError("export supports --format dot or json");
      return do_export(load_source(exp, opt.source, err), opt, out);
    }
    if (opt.format == "dot") throw UsageError("sweep does not support --format dot");
    SweepOptions so;
    so.threads = effective_threads(opt.threads);
    if (sweep_borel_cmd->parsed()) {
      return do_sweep(sweep_borel(parse_range(opt.n_range), parse_range(opt.d_range), so), opt, out, err);
    }
    std::optional<IntRange> d;
    if (!opt.d_range.empty()) d = parse_range(opt.d_range);
    return do_sweep(sweep_veronese(parse_range(opt.k_range), parse_range(opt.n_range), d, so), opt, out, err);
  } catch (const ParseError& e) {
    err << "error: malformed monomial: " << e.what() << "\n";
  } catch (const EmptyDomain& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace freiman::cli
