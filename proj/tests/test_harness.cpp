#include <doctest.h>

#include "oracles.hpp"
#include "smirnov/harness.hpp"
#include "smirnov/json_io.hpp"

using namespace smirnov;

TEST_CASE("every suite passes at small size") {
  VerifyOptions opt;
  opt.n_max = 3;
  opt.samples = 20;
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, opt);
    CHECK_MESSAGE(r.passed(), report_to_text(r));
    CHECK(!r.cases.empty());
    CHECK(std::is_sorted(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; }));
  }
  CHECK(run_verify("all", opt).size() == suite_names().size());
  CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);
  CHECK(default_n_max("bijection") == 5);
  CHECK(default_n_max("models") == 7);
}

TEST_CASE("reports do not depend on the thread count") {
  VerifyOptions one, four;
  one.n_max = four.n_max = 4;
  one.threads = 1;
  four.threads = 4;
  const auto a = run_suite("equidistribution", one), b = run_suite("equidistribution", four);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) CHECK(a.cases[i].key == b.cases[i].key);
  CHECK(report_to_text(a) == report_to_text(b));
}

TEST_CASE("insertion closed forms and multi-insertion") {
  CHECK(insertion_closed_form(InsertionKind::peak, 4, 2) == q_binomial(3, 2));
  CHECK(insertion_closed_form(InsertionKind::double_fall, 2, 2) == QPolynomial::monomial(1));
  CHECK(insertion_closed_form(InsertionKind::singleton, 3, 1) == q_binomial(4, 1));
  const auto w0 = parse_word("1|21|12|121");
  std::vector<std::string> got;
  for (const auto& v : multi_insertions(w0, InsertionKind::peak, 3, 2)) got.push_back(v.to_string());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"1321312|121", "1321|123121", "1|213123121"});
  CHECK(insertion_hypothesis_holds(w0, InsertionKind::peak, 3));
  CHECK_FALSE(insertion_hypothesis_holds(w0, InsertionKind::peak, 2));
  CHECK_FALSE(insertion_hypothesis_holds(parse_word("21|1"), InsertionKind::double_fall, 2));
  CHECK(insertion_hypothesis_holds(parse_word("21|1"), InsertionKind::double_rise, 2));
}

TEST_CASE("table rows") {
  SfCoefficientTable table;
  const auto rows = hilbert_rows(3);
  std::vector<std::pair<int, int>> kl;
  for (const auto& r : rows) kl.emplace_back(r.k, r.l);
  CHECK(kl == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  CHECK(rows[4].poly.to_string() == "3+q");
  const auto h = h_coefficient_rows(3, table, 0, 0);
  REQUIRE(h.size() == 3);
  CHECK(h[0].mu == WeakComposition({3}));
  CHECK(h[0].poly == QPolynomial::one());
  CHECK_THROWS_AS(h_coefficient_rows(3, table, 2, 1), std::invalid_argument);
  const auto csv = rows_to_csv(rows);
  CHECK(csv.rfind("n,k,l,mu,poly\n", 0) == 0);
  CHECK(csv.find("3,1,1,\"(1,1,1)\",3+q\n") != std::string::npos);
  CHECK(rows_to_latex(rows).find("\\begin{tabular}") != std::string::npos);
}

TEST_CASE("JSON mirrors") {
  const auto w = parse_word("231|3212|12");
  const auto jw = word_to_json(w);
  CHECK(jw.dump() == R"({"letters":[2,3,1,3,2,1,2,1,2],"shape":[3,4,2]})");
  CHECK(word_from_json(jw) == w);

  const auto p = QPolynomial::parse("1+2q+q^3");
  CHECK(qpoly_to_json(p).dump() == R"({"coeffs":["1","2","0","1"]})");
  CHECK(qpoly_from_json(qpoly_to_json(p)) == p);

  const auto r = inversion_report_to_json(sminv(w));
  CHECK(r["count"] == 8);
  CHECK(r["pairs"][0].dump() == R"([1,3,"bigger_entry"])");

  const auto d = DecoratedLabelledDyckPath::parse("steps=NNENENNNEENEEENE;labels=2,3,4,1,2,4,3,2;rises=2,6;valleys=3,7");
  CHECK(path_from_json(path_to_json(d)) == d);

  const auto poly = smirnov_to_polyomino(parse_word("213532142"));
  const auto jp = polyomino_to_json(poly);
  CHECK(jp["upper"] == "NENNEEENEE");
  CHECK(jp["labels"][0].dump() == "[0,0,2]");
  CHECK(polyomino_from_json(jp) == poly);

  VerificationReport rep;
  rep.suite = "demo";
  rep.cases = {{"a", true, {}}, {"b", false, "mu=(1) k=0 l=0"}};
  const auto jr = report_to_json(rep);
  CHECK(jr["passed"] == false);
  CHECK(jr["failures"] == 1);
  CHECK(jr["cases"][1]["witness"] == "mu=(1) k=0 l=0");
  CHECK(report_to_text(rep).find("FAIL b: mu=(1) k=0 l=0") != std::string::npos);

  CHECK_THROWS(word_from_json(Json::object()));
}
