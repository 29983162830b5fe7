#include "smirnov/quasisym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "smirnov/qengine.hpp"
#include "smirnov/statistics.hpp"

namespace smirnov {

std::vector<bool> thick_positions(const SegmentedSmirnovWord& w) {
  std::vector<bool> t(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) t[i] = w.is_initial(i) || w[i - 1] > w[i];
  return t;
}

StandardizationProfile standardization_profile(const SegmentedSmirnovWord& w) {
  StandardizationProfile prof;
  prof.thick = thick_positions(w);
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Sort key per position: (letter, thick?, thin positions descending, thick ascending).
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return w[a] < w[b];
    const bool ta = prof.thick[a], tb = prof.thick[b];
    if (ta != tb) return !ta;
    return ta ? a < b : a > b;
  });
  prof.reading_rank.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) prof.reading_rank[order[r]] = r + 1;
  return prof;
}

SegmentedSmirnovWord standardize(const SegmentedSmirnovWord& w) {
  const auto prof = standardization_profile(w);
  std::vector<Letter> letters(prof.reading_rank.begin(), prof.reading_rank.end());
  return SegmentedSmirnovWord(std::move(letters), w.shape());
}

bool is_segmented_permutation(const SegmentedSmirnovWord& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (Letter x : w.letters()) {
    if (x < 1 || static_cast<std::size_t>(x) > w.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

namespace {

std::vector<std::size_t> positions_by_value(const SegmentedSmirnovWord& sigma) {
  if (!is_segmented_permutation(sigma)) throw std::invalid_argument("split_set: input is not a segmented permutation");
  std::vector<std::size_t> pos(sigma.size() + 1);
  for (std::size_t i = 0; i < sigma.size(); ++i) pos[static_cast<std::size_t>(sigma[i])] = i;
  return pos;
}

bool splits(const SegmentedSmirnovWord& sigma, const std::vector<bool>& thick, std::size_t i, std::size_t j) {
  if (sigma.block_of(i) == sigma.block_of(j) && (i + 1 == j || j + 1 == i)) return true;
  if (thick[i] && !thick[j]) return true;
  if (!thick[i] && !thick[j]) return i < j;
  if (thick[i] && thick[j]) return j < i;
  return false;
}

}  // namespace

std::vector<int> split_set(const SegmentedSmirnovWord& sigma) {
  const auto pos = positions_by_value(sigma);
  const auto thick = thick_positions(sigma);
  std::vector<int> out;
  for (std::size_t v = 1; v < sigma.size(); ++v) {
    if (splits(sigma, thick, pos[v], pos[v + 1])) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool satisfies_fiber_conditions(const SegmentedSmirnovWord& sigma, const SegmentedSmirnovWord& w) {
  if (sigma.shape() != w.shape()) return false;
  const auto pos = positions_by_value(sigma);
  const auto thick = thick_positions(sigma);
  for (std::size_t v = 1; v < sigma.size(); ++v) {
    const std::size_t i = pos[v], j = pos[v + 1];
    if (w[i] > w[j]) return false;
    if (w[i] == w[j] && splits(sigma, thick, i, j)) return false;
  }
  return true;
}

std::vector<FundamentalTerm> fundamental_expansion(int n, int k, int l) {
  std::map<std::vector<int>, std::vector<std::uint64_t>> grouped;
  const std::size_t degrees = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2 + 1;
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  for (const auto& sigma : enumerate_words_by_stat(WeakComposition(ones), k, l)) {
    auto& tally = grouped[split_set(sigma)];
    tally.resize(degrees, 0);
    tally[sminv_count(sigma)] += 1;
  }
  std::vector<FundamentalTerm> out;
  for (const auto& [s, tally] : grouped) {
    out.push_back({s, Composition::from_subset(s, n), QPolynomial::from_counts(tally)});
  }
  return out;
}

MonomialExpansion expand_to_monomials(const std::vector<FundamentalTerm>& terms, int alphabet_bound) {
  if (alphabet_bound < 1) throw std::invalid_argument("expand_to_monomials: alphabet bound must be positive");
  MonomialExpansion out;
  for (const auto& term : terms) {
    const std::size_t n = static_cast<std::size_t>(term.composition.sum());
    std::vector<bool> strict(n + 1, false);
    for (int s : term.split_set) strict[static_cast<std::size_t>(s)] = true;
    std::vector<int> exps(static_cast<std::size_t>(alphabet_bound), 0);
    // index sequences i_1 <= ... <= i_n, strict after each split position
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int prev) {
      if (pos == n) {
        out[exps] += term.coefficient;
        return;
      }
      const int lo = pos == 0 ? 1 : (strict[pos] ? prev + 1 : prev);
      for (int v = lo; v <= alphabet_bound; ++v) {
        ++exps[static_cast<std::size_t>(v) - 1];
        rec(pos + 1, v);
        --exps[static_cast<std::size_t>(v) - 1];
      }
    };
    rec(0, 1);
  }
  return out;
}

MonomialExpansion direct_monomial_expansion(int n, int k, int l, int alphabet_bound) {
  if (alphabet_bound < 1) throw std::invalid_argument("direct_monomial_expansion: alphabet bound must be positive");
  MonomialExpansion out;
  for (const auto& mu : weak_compositions_of(n, alphabet_bound)) {
    const auto table = enumerative_table(mu, Statistic::sminv, 1);
    auto it = table.find({k, l});
    if (it == table.end()) continue;
    std::vector<int> exps(static_cast<std::size_t>(alphabet_bound), 0);
    for (std::size_t i = 0; i < mu.length(); ++i) exps[i] = mu[i];
    out[exps] += it->second;
  }
  return out;
}

}  // namespace smirnov
