// Command-line front end: enumerate, stat, verify, table, path, fundamental.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smirnov/core.hpp"
#include "smirnov/harness.hpp"
#include "smirnov/json_io.hpp"
#include "smirnov/paths.hpp"
#include "smirnov/qengine.hpp"
#include "smirnov/quasisym.hpp"
#include "smirnov/statistics.hpp"

using namespace smirnov;

namespace {

struct MemoFile {
  std::string path;
  SfCoefficientTable table;

  void load() {
    if (path.empty()) return;
    std::ifstream in(path);
    if (in) table.load_json(in);
  }
  void save() const {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write memo file '" + path + "'");
    table.save_json(out);
  }
};

WeakComposition parse_mu(const std::string& text) {
  if (text.empty()) return WeakComposition{};
  return WeakComposition::parse(text);
}

int run_enumerate(const std::string& mu_text, int k, int l, const std::string& format, const std::string& objects) {
  const auto mu = parse_mu(mu_text);
  std::vector<SegmentedSmirnovWord> words;
  for_each_word(mu, [&](const SegmentedSmirnovWord& w) {
    if (k >= 0 && w.ascent_count() != static_cast<std::size_t>(k)) return;
    if (l >= 0 && w.descent_count() != static_cast<std::size_t>(l)) return;
    words.push_back(w);
  });
  const bool paths = objects == "paths";
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& w : words) arr.push_back(paths ? area_zero_path_to_json(phi(w)) : word_to_json(w));
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& w : words) std::cout << (paths ? phi(w).to_string() : w.to_string()) << '\n';
  }
  return 0;
}

int run_stat(const std::string& word_text, const std::string& stat, bool json) {
  const auto w = parse_word(word_text);
  const auto report = parse_statistic(stat) == Statistic::sminv ? sminv(w) : sdinv(w);
  if (json) {
    std::cout << inversion_report_to_json(report).dump() << '\n';
    return 0;
  }
  std::cout << report.count << '\n';
  for (const auto& p : report.pairs) std::cout << "(" << p.i << "," << p.j << ") " << case_tags(p.cases) << '\n';
  return 0;
}

int run_verify_cmd(const std::string& suite, int n_max, bool json, const VerifyOptions& base, MemoFile& memo, bool timing) {
  memo.load();
  VerifyOptions opt = base;
  opt.n_max = n_max;
  opt.table = &memo.table;
  const auto reports = run_verify(suite, opt);
  memo.save();
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  if (json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::cout << Json{{"passed", all}, {"reports", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << report_to_text(r);
      if (timing) std::cout << "  wall " << r.wall_seconds << " s\n";
    }
    std::cout << (all ? "ALL PASS" : "FAILURES") << '\n';
  }
  return all ? 0 : 1;
}

int run_table(const std::string& kind, int n, int k, int l, const std::string& format, MemoFile& memo) {
  std::vector<TableRow> rows;
  if (kind == "hilbert") {
    rows = hilbert_rows(n);
  } else {
    memo.load();
    rows = h_coefficient_rows(n, memo.table, k, l);
    memo.save();
  }
  if (format == "latex") {
    std::cout << rows_to_latex(rows);
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"k", r.k}, {"l", r.l}, {"mu", std::vector<int>(r.mu.parts().begin(), r.mu.parts().end())}, {"poly", qpoly_to_json(r.poly)}});
    std::cout << arr.dump() << '\n';
  } else {
    std::cout << rows_to_csv(rows);
  }
  return 0;
}

int run_path(const std::string& word_text, const std::string& path_text, bool json, bool grid) {
  if (!word_text.empty()) {
    const auto w = parse_word(word_text);
    const auto d = phi(w);
    if (json) {
      std::cout << area_zero_path_to_json(d).dump() << '\n';
    } else {
      std::cout << d.to_string() << '\n' << d.to_path().to_string() << '\n';
      std::cout << "unified_dinv " << unified_dinv(d) << '\n';
      if (grid) std::cout << d.to_path().ascii_grid();
    }
    return 0;
  }
  const auto full = DecoratedLabelledDyckPath::parse(path_text);
  if (json) {
    Json j = path_to_json(full);
    j["area_word"] = area_word(full);
    j["area"] = area(full);
    j["dinv"] = path_dinv(full);
    if (area(full) == 0) j["word"] = word_to_json(phi_inverse(AreaZeroDecoratedPath::from_path(full)));
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "area " << area(full) << "\ndinv " << path_dinv(full) << '\n';
  if (area(full) == 0) std::cout << "word " << phi_inverse(AreaZeroDecoratedPath::from_path(full)).to_string() << '\n';
  if (grid) std::cout << full.ascii_grid();
  return 0;
}

int run_fundamental(int n, int k, int l, bool json) {
  const auto terms = fundamental_expansion(n, k, l);
  if (json) {
    Json arr = Json::array();
    for (const auto& t : terms) arr.push_back(fundamental_term_to_json(t));
    std::cout << arr.dump() << '\n';
    return 0;
  }
  for (const auto& t : terms) {
    std::cout << "{";
    for (std::size_t i = 0; i < t.split_set.size(); ++i) std::cout << (i ? "," : "") << t.split_set[i];
    std::cout << "} " << t.coefficient.to_string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segmented Smirnov words: enumeration, statistics and verification"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker count (overrides SMIRNOV_THREADS)");

  std::string mu_text, format = "text", objects = "words";
  int k = -1, l = -1;
  auto* en = app.add_subcommand("enumerate", "list SW(mu) or SW(mu,k,l) in enumeration order");
  en->add_option("--mu", mu_text, "content, e.g. 2,1")->required();
  en->add_option("--k", k, "ascents");
  en->add_option("--l", l, "descents");
  en->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  en->add_option("--objects", objects, "words, or their images as area-0 paths")->check(CLI::IsMember({"words", "paths"}));

  std::string word_text, stat = "sminv";
  bool json = false;
  auto* st = app.add_subcommand("stat", "compute sminv or sdinv with the counted pairs");
  st->add_option("--word", word_text, "e.g. 231|3212|12")->required();
  st->add_option("--stat", stat)->check(CLI::IsMember({"sminv", "sdinv"}));
  st->add_flag("--json", json);

  std::string suite = "all";
  int n_max = 0;
  bool timing = false;
  VerifyOptions vopt;
  MemoFile memo;
  auto* ve = app.add_subcommand("verify", "run oracle-versus-enumeration suites");
  ve->add_option("--suite", suite)->check(CLI::IsMember({"main-theorem", "equidistribution", "bijection", "insertion-lemmas", "quasisym", "models", "all"}));
  ve->add_option("--n-max", n_max, "largest size (default per suite)");
  ve->add_option("--seed", vopt.seed);
  ve->add_option("--samples", vopt.samples, "random instances per insertion kind and statistic");
  ve->add_option("--memo-file", memo.path, "load and save the recursion memo as JSON");
  ve->add_flag("--json", json);
  ve->add_flag("--timing", timing, "print wall time per suite");

  std::string kind = "h-coeff", table_format = "csv";
  int n = 0;
  auto* ta = app.add_subcommand("table", "export the h-coefficient or Hilbert table");
  ta->add_option("--kind", kind)->check(CLI::IsMember({"h-coeff", "hilbert"}));
  ta->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  ta->add_option("--k", k);
  ta->add_option("--l", l);
  ta->add_option("--format", table_format)->check(CLI::IsMember({"csv", "latex", "json"}));
  ta->add_option("--memo-file", memo.path);

  std::string path_text;
  bool grid = false;
  auto* pa = app.add_subcommand("path", "map a word through phi, or read a decorated path");
  auto* pw = pa->add_option("--word", word_text);
  auto* pp = pa->add_option("--path", path_text, "steps=..;labels=..;rises=..;valleys=..");
  pw->excludes(pp);
  pa->add_flag("--grid", grid);
  pa->add_flag("--json", json);

  auto* fu = app.add_subcommand("fundamental", "fundamental quasisymmetric expansion of SW(n,k,l)");
  fu->add_option("--n", n)->required();
  fu->add_option("--k", k)->required();
  fu->add_option("--l", l)->required();
  fu->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  if (threads <= 0) threads = threads_from_env();
  if (threads > 0) omp_set_num_threads(threads);
  vopt.threads = threads;

  try {
    if (*en) return run_enumerate(mu_text, k, l, format, objects);
    if (*st) return run_stat(word_text, stat, json);
    if (*ve) return run_verify_cmd(suite, n_max, json, vopt, memo, timing);
    if (*ta) return run_table(kind, n, k, l, table_format, memo);
    if (*pa) {
      if (word_text.empty() && path_text.empty()) throw std::invalid_argument("path needs --word or --path");
      return run_path(word_text, path_text, json, grid);
    }
    if (*fu) return run_fundamental(n, k, l, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (index " << e.index() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
