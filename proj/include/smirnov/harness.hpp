#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smirnov/core.hpp"
#include "smirnov/qengine.hpp"
#include "smirnov/qpoly.hpp"
#include "smirnov/statistics.hpp"

namespace smirnov {

// ---- insertion lemma machinery ------------------------------------------

// Whether m is admissible for inserting copies of `kind` into w: m >= max
// letter (strictly for peaks), and no initial / final / singleton m for the
// fall / rise / singleton kinds.
bool insertion_hypothesis_holds(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m);

// Number of sites an s-fold insertion chooses from (separators for peaks,
// blocks for falls and rises, gaps for singletons).
std::size_t insertion_site_count(const SegmentedSmirnovWord& w, InsertionKind kind);

// Every word obtained by inserting s copies of m as `kind`: s-subsets of
// sites, or s-multisets of gaps for singletons. Sites are applied from the
// rightmost one so earlier slot numbers stay valid.
std::vector<SegmentedSmirnovWord> multi_insertions(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m, int s);

// Sum of q^stat over multi_insertions(w, kind, m, s).
QPolynomial insertion_enumerator(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m, int s, Statistic stat);

// The lemma's factor for a word with `blocks` blocks, without q^stat(w).
QPolynomial insertion_closed_form(InsertionKind kind, int blocks, int s);

// ---- verification suites ------------------------------------------------

struct CaseResult {
  std::string key;
  bool passed = true;
  std::string witness;  // empty on success
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CaseResult> cases;  // sorted by key
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  int n_max = 0;  // 0 selects the suite default
  int threads = 0;
  std::uint64_t seed = 20240601;
  int samples = 200;
  SfCoefficientTable* table = nullptr;  // shared memo, optional
};

const std::vector<std::string>& suite_names();
int default_n_max(std::string_view suite);
// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options);
// "all" runs every suite in suite_names() order.
std::vector<VerificationReport> run_verify(std::string_view selector, const VerifyOptions& options);

// ---- tables ---------------------------------------------------------------

struct TableRow {
  int n;
  int k;
  int l;
  WeakComposition mu;
  QPolynomial poly;
};

// Rows ordered by k+l, then by decreasing k, then by mu (partitions of n in
// decreasing lexicographic order). k and l filter when nonnegative; a filter
// pair with k + l >= n > 0 throws std::invalid_argument.
std::vector<TableRow> h_coefficient_rows(int n, SfCoefficientTable& table, int k = -1, int l = -1);
std::vector<TableRow> hilbert_rows(int n);

}  // namespace smirnov
