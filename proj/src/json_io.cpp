#include "smirnov/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace smirnov {

namespace {

template <class T>
std::vector<T> as_vector(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw std::invalid_argument(std::string("missing array field '") + field + "'");
  return j.at(field).get<std::vector<T>>();
}

std::string mu_cell(const WeakComposition& mu) { return "\"" + mu.to_string() + "\""; }

}  // namespace

Json word_to_json(const SegmentedSmirnovWord& w) {
  return {{"letters", std::vector<Letter>(w.letters().begin(), w.letters().end())},
          {"shape", std::vector<int>(w.shape().parts().begin(), w.shape().parts().end())}};
}

SegmentedSmirnovWord word_from_json(const Json& j) {
  return SegmentedSmirnovWord(as_vector<Letter>(j, "letters"), Composition(as_vector<int>(j, "shape")));
}

Json qpoly_to_json(const QPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

QPolynomial qpoly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& s : as_vector<std::string>(j, "coeffs")) coeffs.emplace_back(s);
  return QPolynomial(std::move(coeffs));
}

Json inversion_report_to_json(const InversionReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(Json::array({p.i, p.j, case_tags(p.cases)}));
  return {{"count", r.count}, {"pairs", pairs}};
}

Json path_to_json(const DecoratedLabelledDyckPath& d) {
  return {{"steps", d.step_string()}, {"labels", d.labels()}, {"rises", d.decorated_rises()}, {"valleys", d.decorated_valleys()}};
}

DecoratedLabelledDyckPath path_from_json(const Json& j) {
  if (!j.contains("steps") || !j.at("steps").is_string()) throw std::invalid_argument("missing string field 'steps'");
  std::vector<Step> steps;
  for (char c : j.at("steps").get<std::string>()) {
    if (c != 'N' && c != 'E') throw std::invalid_argument("steps must be over {N,E}");
    steps.push_back(static_cast<Step>(c));
  }
  return DecoratedLabelledDyckPath(std::move(steps), as_vector<Letter>(j, "labels"), as_vector<std::size_t>(j, "rises"),
                                   as_vector<std::size_t>(j, "valleys"));
}

Json area_zero_path_to_json(const AreaZeroDecoratedPath& d) {
  return {{"blocks", d.blocks()}, {"path", path_to_json(d.to_path())}};
}

Json polyomino_to_json(const LabelledPolyomino& p) {
  Json labels = Json::array();
  for (const auto& [cell, value] : p.labels()) labels.push_back(Json::array({cell.first, cell.second, value}));
  return {{"upper", p.upper()}, {"lower", p.lower()}, {"labels", labels}};
}

LabelledPolyomino polyomino_from_json(const Json& j) {
  std::map<LabelledPolyomino::Cell, Letter> labels;
  for (const auto& t : as_vector<std::vector<int>>(j, "labels")) {
    if (t.size() != 3) throw std::invalid_argument("polyomino label entries are [col,row,value]");
    labels[{t[0], t[1]}] = t[2];
  }
  return LabelledPolyomino(j.at("upper").get<std::string>(), j.at("lower").get<std::string>(), std::move(labels));
}

Json fundamental_term_to_json(const FundamentalTerm& t) {
  return {{"split_set", t.split_set},
          {"composition", std::vector<int>(t.composition.parts().begin(), t.composition.parts().end())},
          {"coeff", qpoly_to_json(t.coefficient)}};
}

Json report_to_json(const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json e = {{"key", c.key}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) e["witness"] = c.witness;
    cases.push_back(std::move(e));
  }
  return {{"suite", r.suite},
          {"parameters", params},
          {"passed", r.passed()},
          {"case_count", r.cases.size()},
          {"failures", r.failures()},
          {"cases", cases},
          {"notes", r.notes},
          {"wall_seconds", r.wall_seconds}};
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite;
  for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
  out << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases.size() - r.failures() << '/' << r.cases.size() << " cases)\n";
  for (const auto& c : r.cases)
    if (!c.passed) out << "  FAIL " << c.key << ": " << c.witness << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  return out.str();
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,k,l,mu,poly\n";
  for (const auto& r : rows) out << r.n << ',' << r.k << ',' << r.l << ',' << mu_cell(r.mu) << ',' << r.poly.to_string() << '\n';
  return out.str();
}

std::string rows_to_latex(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "\\begin{tabular}{rrrll}\n\\hline\n$n$ & $k$ & $l$ & $\\mu$ & polynomial \\\\\n\\hline\n";
  for (const auto& r : rows) out << r.n << " & " << r.k << " & " << r.l << " & $" << r.mu.to_string() << "$ & $" << r.poly.to_string() << "$ \\\\\n";
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

}  // namespace smirnov
