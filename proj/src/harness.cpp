#include "smirnov/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smirnov/models.hpp"
#include "smirnov/paths.hpp"
#include "smirnov/quasisym.hpp"

namespace smirnov {

// ---- insertion lemma machinery ------------------------------------------

bool insertion_hypothesis_holds(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m) {
  const Letter top = w.empty() ? 0 : w.max_letter();
  if (m < 1 || m < top) return false;
  if (kind == InsertionKind::peak) return m > top;
  for (std::size_t b = 0; b < w.block_count(); ++b) {
    const auto blk = w.block(b);
    switch (kind) {
      case InsertionKind::double_fall:
        if (blk.front() == m) return false;
        break;
      case InsertionKind::double_rise:
        if (blk.back() == m) return false;
        break;
      case InsertionKind::singleton:
        if (blk.size() == 1 && blk.front() == m) return false;
        break;
      case InsertionKind::peak:
        break;
    }
  }
  return true;
}

std::size_t insertion_site_count(const SegmentedSmirnovWord& w, InsertionKind kind) {
  return insertion_slot_count(w, kind);
}

namespace {

// Visits nondecreasing (multiset) or strictly increasing (subset) index
// sequences of length s over [0, sites).
void for_each_selection(std::size_t sites, int s, bool repeats, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (pick.size() == static_cast<std::size_t>(s)) {
      visit(pick);
      return;
    }
    for (std::size_t v = lo; v < sites; ++v) {
      pick.push_back(v);
      rec(repeats ? v : v + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<SegmentedSmirnovWord> multi_insertions(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m, int s) {
  std::vector<SegmentedSmirnovWord> out;
  if (s < 0) return out;
  const bool repeats = kind == InsertionKind::singleton;
  for_each_selection(insertion_site_count(w, kind), s, repeats, [&](const std::vector<std::size_t>& pick) {
    // Each peak copy must exceed everything already present, so copies go in
    // as m, m+1, ... and are folded back to m afterwards. They occupy distinct
    // separators, so the fold never makes two copies adjacent.
    SegmentedSmirnovWord cur = w;
    Letter next = m;
    for (auto it = pick.rbegin(); it != pick.rend(); ++it) {
      cur = insert_maximal(cur, kind, *it, next);
      if (kind == InsertionKind::peak) ++next;
    }
    if (kind == InsertionKind::peak && next > m + 1) {
      std::vector<Letter> letters(cur.letters().begin(), cur.letters().end());
      for (auto& x : letters) x = std::min(x, m);
      cur = SegmentedSmirnovWord(std::move(letters), cur.shape());
    }
    out.push_back(std::move(cur));
  });
  return out;
}

QPolynomial insertion_enumerator(const SegmentedSmirnovWord& w, InsertionKind kind, Letter m, int s, Statistic stat) {
  QPolynomial sum;
  for (const auto& v : multi_insertions(w, kind, m, s)) sum += QPolynomial::monomial(statistic(v, stat));
  return sum;
}

QPolynomial insertion_closed_form(InsertionKind kind, int blocks, int s) {
  switch (kind) {
    case InsertionKind::peak:
      return q_binomial(blocks - 1, s);
    case InsertionKind::double_fall:
    case InsertionKind::double_rise:
      return q_power_binom2(s) * q_binomial(blocks, s);
    case InsertionKind::singleton:
      return q_binomial(blocks + s, s);
  }
  return {};
}

// ---- reports ---------------------------------------------------------------

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

namespace {

using Task = std::function<std::vector<CaseResult>()>;

CaseResult ok(std::string key) { return {std::move(key), true, {}}; }
CaseResult fail(std::string key, std::string witness) { return {std::move(key), false, std::move(witness)}; }
CaseResult check(std::string key, bool good, const std::function<std::string()>& witness) {
  return good ? ok(std::move(key)) : fail(std::move(key), witness());
}

std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<std::vector<CaseResult>> parts(tasks.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long t = 0; t < count; ++t) {
    try {
      parts[static_cast<std::size_t>(t)] = tasks[static_cast<std::size_t>(t)]();
    } catch (const std::exception& e) {
      parts[static_cast<std::size_t>(t)] = {fail("task " + std::to_string(t), std::string("exception: ") + e.what())};
    }
  }
  std::vector<CaseResult> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  return out;
}

std::string kl_key(std::string_view prefix, const WeakComposition& mu, int k, int l) {
  std::ostringstream s;
  s << prefix << " n=" << mu.sum() << " mu=" << mu.to_string() << " k=" << k << " l=" << l;
  return s.str();
}

QPolynomial lookup(const KlTable& t, int k, int l) {
  auto it = t.find({k, l});
  return it == t.end() ? QPolynomial{} : it->second;
}

std::vector<WeakComposition> rearrangements_with_gap(const WeakComposition& mu) {
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  parts.push_back(0);
  std::sort(parts.begin(), parts.end());
  std::set<WeakComposition> seen;
  do {
    seen.insert(WeakComposition(parts));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return {seen.begin(), seen.end()};
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n <= 0) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (1u << b)) subset.push_back(b + 1);
    out.push_back(Composition::from_subset(subset, n));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_set(const InversionReport& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : r.pairs) out.emplace_back(p.i, p.j);
  return out;
}

// ---- main-theorem --------------------------------------------------------

void main_theorem_tasks(int n_max, SfCoefficientTable& table, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& mu : partitions_of(n)) {
      tasks.push_back([n, mu, &table] {
        std::vector<CaseResult> out;
        const auto enumerated = enumerative_table(mu, Statistic::sminv, 1);
        for (int k = 0; k < n; ++k)
          for (int l = 0; k + l < n; ++l) {
            const auto rec = sf_h_coefficient(n, k, l, mu, table);
            const auto en = lookup(enumerated, k, l);
            out.push_back(check(kl_key("sf", mu, k, l), rec == en, [&] {
              return "mu=" + mu.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " recursion=" + rec.to_string() +
                     " enumeration=" + en.to_string();
            }));
          }
        return out;
      });
    }
    tasks.push_back([n, &table] {
      std::vector<CaseResult> out;
      const WeakComposition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      const auto enumerated = enumerative_table(ones, Statistic::sminv, 1);
      for (int k = 0; k < n; ++k)
        for (int l = 0; k + l < n; ++l) {
          const auto st = standard_q_count(n, k, l);
          const auto en = lookup(enumerated, k, l);
          const auto rec = sf_h_coefficient(n, k, l, ones, table);
          out.push_back(check(kl_key("standard", ones, k, l), st == en && st == rec, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " standard=" + st.to_string() +
                   " enumeration=" + en.to_string() + " recursion=" + rec.to_string();
          }));
        }
      return out;
    });
  }
  tasks.push_back([] {
    std::vector<CaseResult> out;
    for (long j = 0; j <= 10; ++j)
      for (long a = 0; a <= j; ++a)
        for (long r = 0; r <= j; ++r) {
          QPolynomial rhs;
          for (long i = 0; i <= std::min(a, r); ++i)
            rhs += q_binomial(r, i) * q_binomial(j - r, a - i).shifted(static_cast<std::size_t>((r - i) * (a - i)));
          const auto lhs = q_binomial(j, a);
          std::ostringstream key;
          key << "q-chu-vandermonde j=" << j << " a=" << a << " r=" << r;
          out.push_back(check(key.str(), lhs == rhs, [&] { return key.str() + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string(); }));
        }
    for (long x = 0; x <= 10; ++x)
      for (long y = 0; y <= x; ++y)
        for (long z = 0; z <= y; ++z) {
          const auto lhs = q_binomial(x, y) * q_binomial(y, z);
          const auto rhs = q_binomial(x, x - y + z) * q_binomial(x - y + z, z);
          std::ostringstream key;
          key << "q-trinomial x=" << x << " y=" << y << " z=" << z;
          out.push_back(check(key.str(), lhs == rhs, [&] { return key.str() + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string(); }));
        }
    return out;
  });
}

// ---- equidistribution, symmetry and projections --------------------------

std::vector<CaseResult> projection_cases(const WeakComposition& alpha) {
  std::vector<CaseResult> out;
  const int n = alpha.sum();
  for (int side = 0; side < 2; ++side) {
    for (int x = 0; x < n; ++x) {
      const int k = side == 0 ? x : 0;
      const int l = side == 0 ? 0 : x;
      const auto words = enumerate_words_by_stat(alpha, k, l);
      std::vector<OrderedMultisetPartition> images;
      std::string bad;
      for (const auto& w : words) {
        const auto p = project(w);
        if (!p.is_set_partition()) {
          bad = "word=" + w.to_string() + " projects to a multiset block";
          break;
        }
        const std::size_t want_inv = omp_inv(p);
        const std::size_t want_sd = side == 0 ? omp_dinv(p) : omp_inv(p);
        if (sminv_count(w) != want_inv || sdinv_count(w) != want_sd) {
          bad = "word=" + w.to_string() + " sminv=" + std::to_string(sminv_count(w)) + " inv=" + std::to_string(want_inv) +
                " sdinv=" + std::to_string(sdinv_count(w)) + " expected=" + std::to_string(want_sd);
          break;
        }
        images.push_back(p);
      }
      if (bad.empty()) {
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) bad = "projection not injective";
        else if (images != enumerate_ordered_set_partitions(alpha, n - x))
          bad = "image size " + std::to_string(images.size()) + " differs from OP(mu," + std::to_string(n - x) + ")";
      }
      out.push_back(check(kl_key("projection", alpha, k, l), bad.empty(),
                          [&] { return "mu=" + alpha.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + bad; }));
    }
  }
  return out;
}

void equidistribution_tasks(int n_max, SfCoefficientTable& sorted, SfCoefficientTable& unsorted, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& mu : partitions_of(n)) {
      tasks.push_back([mu] {
        std::vector<CaseResult> out;
        const auto a = enumerative_table(mu, Statistic::sminv, 1);
        const auto b = enumerative_table(mu, Statistic::sdinv, 1);
        const int n = mu.sum();
        for (int k = 0; k < n; ++k)
          for (int l = 0; k + l < n; ++l) {
            const auto x = lookup(a, k, l), y = lookup(b, k, l);
            out.push_back(check(kl_key("equidistribution", mu, k, l), x == y, [&] {
              return "mu=" + mu.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " sminv=" + x.to_string() +
                     " sdinv=" + y.to_string();
            }));
          }
        return out;
      });
      for (const auto& alpha : rearrangements_with_gap(mu)) {
        tasks.push_back([mu, alpha, &sorted, &unsorted] {
          std::vector<CaseResult> out;
          const auto base = enumerative_table(mu, Statistic::sminv, 1);
          const auto moved = enumerative_table(alpha, Statistic::sminv, 1);
          const int n = mu.sum();
          bool good = true;
          std::string witness;
          for (int k = 0; k < n && good; ++k)
            for (int l = 0; k + l < n && good; ++l) {
              const auto want = sf_h_coefficient(n, k, l, mu, sorted);
              const auto rec = sf_h_coefficient(n, k, l, alpha, unsorted);
              const auto en = lookup(moved, k, l);
              if (en != lookup(base, k, l) || rec != want) {
                good = false;
                witness = "mu=" + mu.to_string() + " rearranged=" + alpha.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                          " enumeration=" + en.to_string() + " unsorted recursion=" + rec.to_string() + " expected=" + want.to_string();
              }
            }
          out.push_back(check("symmetry n=" + std::to_string(n) + " mu=" + mu.to_string() + " as " + alpha.to_string(), good,
                              [&] { return witness; }));
          auto proj = projection_cases(alpha);
          std::move(proj.begin(), proj.end(), std::back_inserter(out));
          return out;
        });
      }
    }
  }
}

// ---- bijection -------------------------------------------------------------

std::vector<CaseResult> bijection_case(const WeakComposition& mu, int k, int l, SfCoefficientTable& table) {
  const int n = mu.sum();
  const auto words = enumerate_words_by_stat(mu, k, l);
  const auto paths = enumerate_area_zero_paths(mu, k, l);
  std::string bad;
  std::vector<AreaZeroDecoratedPath> images;
  for (const auto& w : words) {
    const auto d = phi(w);
    if (phi_inverse(d) != w) {
      bad = "word=" + w.to_string() + " phi=" + d.to_string() + " does not return";
      break;
    }
    if (d.decorated_rise_count() != static_cast<std::size_t>(k) || d.decorated_valley_count() != static_cast<std::size_t>(l)) {
      bad = "word=" + w.to_string() + " phi=" + d.to_string() + " has wrong decoration counts";
      break;
    }
    if (unified_dinv(d) != sdinv_count(w)) {
      bad = "word=" + w.to_string() + " unified dinv differs from sdinv";
      break;
    }
    images.push_back(d);
  }
  QPolynomial sum;
  if (bad.empty()) {
    std::sort(images.begin(), images.end());
    if (images != paths) bad = "phi image differs from enumerated paths (" + std::to_string(images.size()) + " vs " + std::to_string(paths.size()) + ")";
  }
  if (bad.empty()) {
    for (const auto& d : paths) {
      const auto full = d.to_path();
      if (AreaZeroDecoratedPath::from_path(full) != d || phi(phi_inverse(d)) != d || area(full) != 0) {
        bad = "path=" + d.to_string() + " fails a round trip";
        break;
      }
      const std::size_t ud = unified_dinv(d);
      if ((k == 0 || l == 0) && static_cast<long>(ud) != path_dinv(full)) {
        bad = "path=" + d.to_string() + " unified dinv " + std::to_string(ud) + " vs dinv " + std::to_string(path_dinv(full));
        break;
      }
      sum += QPolynomial::monomial(ud);
    }
  }
  if (bad.empty()) {
    const auto want = sf_h_coefficient(n, k, l, mu, table);
    if (sum != want) bad = "sum q^unified_dinv=" + sum.to_string() + " recursion=" + want.to_string();
  }
  return {check(kl_key("phi", mu, k, l), bad.empty(),
                [&] { return "mu=" + mu.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + bad; })};
}

void bijection_tasks(int n_max, SfCoefficientTable& table, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n)
    for (const auto& mu : partitions_of(n))
      for (int k = 0; k < n; ++k)
        for (int l = 0; k + l < n; ++l) tasks.push_back([mu, k, l, &table] { return bijection_case(mu, k, l, table); });
}

// ---- insertion lemmas --------------------------------------------------------

SegmentedSmirnovWord random_word(std::mt19937_64& rng, int n_max) {
  std::uniform_int_distribution<int> size_dist(1, std::max(n_max, 1));
  const int n = size_dist(rng);
  std::uniform_int_distribution<int> alpha_dist(1, std::min(n, 4));
  std::uniform_int_distribution<int> letter_dist(1, alpha_dist(rng));
  std::bernoulli_distribution cut(0.5);
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (auto& x : letters) x = letter_dist(rng);
  std::vector<int> subset;
  for (int i = 1; i < n; ++i)
    if (letters[static_cast<std::size_t>(i) - 1] == letters[static_cast<std::size_t>(i)] || cut(rng)) subset.push_back(i);
  return SegmentedSmirnovWord(std::move(letters), Composition::from_subset(subset, n));
}

constexpr InsertionKind kAllKinds[] = {InsertionKind::peak, InsertionKind::double_fall, InsertionKind::double_rise, InsertionKind::singleton};

void insertion_tasks(int n_max, const VerifyOptions& opt, std::vector<Task>& tasks) {
  for (Statistic stat : {Statistic::sminv, Statistic::sdinv})
    for (InsertionKind kind : kAllKinds)
      for (int sample = 0; sample < opt.samples; ++sample) {
        tasks.push_back([=] {
          std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(stat), static_cast<std::uint64_t>(kind),
                            static_cast<std::uint64_t>(sample)};
          std::mt19937_64 rng(seq);
          const auto w = random_word(rng, n_max);
          const Letter top = w.max_letter();
          Letter m = top + (std::bernoulli_distribution(0.5)(rng) ? 1 : 0);
          if (!insertion_hypothesis_holds(w, kind, m)) m = top + 1;
          const auto sites = static_cast<int>(insertion_site_count(w, kind));
          const int s_hi = kind == InsertionKind::singleton ? 3 : sites;
          const int s = std::uniform_int_distribution<int>(0, s_hi)(rng);
          const auto got = insertion_enumerator(w, kind, m, s, stat);
          const auto want = insertion_closed_form(kind, static_cast<int>(w.block_count()), s).shifted(statistic(w, stat));
          char num[16];
          std::snprintf(num, sizeof num, "%04d", sample);
          std::string key = "insertion " + std::string(statistic_name(stat)) + " " + std::string(insertion_kind_name(kind)) + " #" + num;
          return std::vector<CaseResult>{check(std::move(key), got == want, [&] {
            return "word=" + w.to_string() + " m=" + std::to_string(m) + " s=" + std::to_string(s) + " enumerated=" + got.to_string() +
                   " closed form=" + want.to_string();
          })};
        });
      }
}

// ---- quasisymmetric expansion ----------------------------------------------

void quasisym_tasks(int n_max, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k < n; ++k)
      for (int l = 0; k + l < n; ++l)
        tasks.push_back([n, k, l] {
          std::vector<CaseResult> out;
          const auto terms = fundamental_expansion(n, k, l);
          for (int bound = 1; bound <= n; ++bound) {
            const auto lhs = expand_to_monomials(terms, bound);
            const auto rhs = direct_monomial_expansion(n, k, l, bound);
            std::ostringstream key;
            key << "fundamental n=" << n << " k=" << k << " l=" << l << " bound=" << bound;
            out.push_back(check(key.str(), lhs == rhs, [&] { return key.str() + " expansions differ"; }));
          }
          return out;
        });
  const int st_max = std::min(n_max + 1, 6);
  for (int n = 1; n <= st_max; ++n)
    for (const auto& shape : compositions_of(n))
      tasks.push_back([n, shape, n_max] {
        std::vector<CaseResult> out;
        std::string key = "standardization n=" + std::to_string(n) + " shape=";
        for (std::size_t i = 0; i < shape.length(); ++i) key += (i ? "," : "") + std::to_string(shape[i]);
        std::string bad;
        for (const auto& w : enumerate_words_of_shape(shape, 4)) {
          const auto s = standardize(w);
          if (!is_segmented_permutation(s) || s.shape() != w.shape() || s.ascent_count() != w.ascent_count() ||
              s.descent_count() != w.descent_count() || pair_set(sminv(s)) != pair_set(sminv(w))) {
            bad = "word=" + w.to_string() + " st=" + s.to_string();
            break;
          }
        }
        out.push_back(check(key, bad.empty(), [&] { return bad; }));
        if (n <= n_max) {
          std::vector<SegmentedSmirnovWord> perms;
          for (const auto& v : enumerate_words_of_shape(shape, n))
            if (is_segmented_permutation(v)) perms.push_back(v);
          bad.clear();
          for (const auto& w : enumerate_words_of_shape(shape, 3)) {
            const auto s = standardize(w);
            for (const auto& sigma : perms)
              if ((s == sigma) != satisfies_fiber_conditions(sigma, w)) {
                bad = "word=" + w.to_string() + " sigma=" + sigma.to_string() + " st=" + s.to_string();
                break;
              }
            if (!bad.empty()) break;
          }
          out.push_back(check("fiber" + key.substr(15), bad.empty(), [&] { return bad; }));
        }
        return out;
      });
}

// ---- models ------------------------------------------------------------------

std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

std::vector<CaseResult> permutation_model_cases(int n) {
  std::vector<CaseResult> out;
  const std::string tag = " n=" + std::to_string(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::set<std::vector<int>> avoiders;
  std::map<std::size_t, std::uint64_t> descents_of_avoiders;
  std::string bad;
  do {
    const auto w = SegmentedSmirnovWord(std::vector<Letter>(perm.begin(), perm.end()), Composition(std::vector<int>{n}));
    const bool zero = sminv_count(w) == 0;
    if (zero != is_231_avoiding(perm) && bad.empty()) bad = "word=" + w.to_string() + (zero ? " has sminv 0 but contains 231" : " avoids 231 but sminv > 0");
    if (zero) {
      avoiders.insert(perm);
      ++descents_of_avoiders[permutation_descents(perm)];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.push_back(check("231" + tag, bad.empty() && avoiders.size() == catalan(n),
                      [&] { return bad.empty() ? "count " + std::to_string(avoiders.size()) + " vs Catalan " + std::to_string(catalan(n)) : bad; }));

  bad.clear();
  std::map<std::size_t, std::uint64_t> by_blocks;
  std::set<std::vector<int>> images;
  const auto ncs = enumerate_noncrossing_partitions(n);
  for (const auto& p : ncs) {
    const auto img = noncrossing_to_permutation(p);
    ++by_blocks[p.blocks().size()];
    if (!avoiders.count(img) || permutation_to_noncrossing(img) != p || permutation_ascents(img) + 1 != p.blocks().size()) {
      bad = "partition=" + p.to_string();
      break;
    }
    images.insert(img);
  }
  if (bad.empty() && images != avoiders) bad = "image is not all 231-avoiders";
  out.push_back(check("noncrossing" + tag, bad.empty(), [&] { return bad; }));

  // Narayana numbers C(n,b)C(n,b-1)/n, computed by Pascal's rule.
  std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    binom[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
    for (int b = 1; b < a; ++b)
      binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] + binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)];
  }
  bool narayana = true;
  for (int b = 1; b <= n; ++b) {
    const std::uint64_t want = binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)] *
                               binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(b) - 1] / static_cast<std::uint64_t>(n);
    narayana = narayana && by_blocks[static_cast<std::size_t>(b)] == want && descents_of_avoiders[static_cast<std::size_t>(b) - 1] == want;
  }
  out.push_back(check("narayana" + tag, narayana, [&] { return "block or descent counts differ from Narayana numbers at" + tag; }));
  return out;
}

std::vector<CaseResult> polyomino_cases(const WeakComposition& mu) {
  std::vector<CaseResult> out;
  const int n = mu.sum();
  for (int k = 0; k < n; ++k) {
    std::string bad;
    std::vector<LabelledPolyomino> images;
    for (const auto& w : enumerate_words_by_stat(mu, k, n - 1 - k)) {
      const auto p = smirnov_to_polyomino(w);
      if (p.area() != 0 || polyomino_to_smirnov(p) != w) {
        bad = "word=" + w.to_string() + " polyomino=" + p.to_string();
        break;
      }
      images.push_back(p);
    }
    if (bad.empty()) {
      std::sort(images.begin(), images.end());
      if (images != enumerate_area_zero_polyominoes(mu, k)) bad = "image differs from the area-0 polyominoes";
    }
    out.push_back(check(kl_key("polyomino", mu, k, n - 1 - k), bad.empty(), [&] { return "mu=" + mu.to_string() + " k=" + std::to_string(k) + " " + bad; }));
  }
  return out;
}

std::vector<CaseResult> chromatic_cases(int n, SfCoefficientTable& table) {
  std::vector<CaseResult> out;
  const auto tally = chromatic_path_enumerator(n, n);
  for (int d = 0; d < n; ++d) {
    std::string bad;
    std::size_t monomials = 0;
    for (const auto& mu : weak_compositions_of(n, n)) {
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < mu.length(); ++i) exps[i] = mu[i];
      std::uint64_t got = 0;
      if (auto it = tally.find(d); it != tally.end())
        if (auto jt = it->second.find(exps); jt != it->second.end()) got = jt->second;
      const BigInt want = sf_h_coefficient(n, n - 1 - d, d, mu.sorted_partition(), table).at_one();
      ++monomials;
      if (BigInt(got) != want) {
        bad = "content=" + mu.to_string() + " descents=" + std::to_string(d) + " colorings=" + std::to_string(got) + " recursion=" + want.str();
        break;
      }
    }
    out.push_back(check("chromatic n=" + std::to_string(n) + " descents=" + std::to_string(d), bad.empty(), [&] { return bad; }));
  }
  return out;
}

void models_tasks(int n_max, SfCoefficientTable& table, std::vector<Task>& tasks) {
  for (int n = 1; n <= n_max; ++n) tasks.push_back([n] { return permutation_model_cases(n); });
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    for (const auto& mu : partitions_of(n)) tasks.push_back([mu] { return polyomino_cases(mu); });
    tasks.push_back([n, &table] { return chromatic_cases(n, table); });
  }
}

VerificationReport make_report(std::string_view suite, int n_max, const VerifyOptions& opt) {
  VerificationReport r;
  r.suite = std::string(suite);
  r.parameters.emplace_back("n_max", std::to_string(n_max));
  if (suite == "insertion-lemmas") {
    r.parameters.emplace_back("samples", std::to_string(opt.samples));
    r.parameters.emplace_back("seed", std::to_string(opt.seed));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main-theorem", "equidistribution", "bijection", "insertion-lemmas", "quasisym", "models"};
  return names;
}

int default_n_max(std::string_view suite) {
  if (suite == "main-theorem" || suite == "equidistribution") return 6;
  if (suite == "bijection" || suite == "quasisym") return 5;
  if (suite == "insertion-lemmas" || suite == "models") return 7;
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

VerificationReport run_suite(std::string_view suite, const VerifyOptions& options) {
  const int n_max = options.n_max > 0 ? options.n_max : default_n_max(suite);
  const auto start = std::chrono::steady_clock::now();
  SfCoefficientTable local;
  SfCoefficientTable& table = options.table ? *options.table : local;
  SfCoefficientTable unsorted(false);
  std::vector<Task> tasks;
  VerificationReport report = make_report(suite, n_max, options);
  if (suite == "main-theorem") {
    main_theorem_tasks(n_max, table, tasks);
  } else if (suite == "equidistribution") {
    equidistribution_tasks(n_max, table, unsorted, tasks);
  } else if (suite == "bijection") {
    bijection_tasks(n_max, table, tasks);
    // Nonnegativity of dinv on decorated paths is observed here, not asserted.
    long lowest = 0;
    bool any = false;
    for (int n = 1; n <= n_max; ++n)
      for (const auto& mu : partitions_of(n))
        for (int k = 0; k < n; ++k)
          for (int l = 0; k + l < n; ++l)
            for (const auto& d : enumerate_area_zero_paths(mu, k, l)) {
              const long v = path_dinv(d.to_path());
              lowest = any ? std::min(lowest, v) : v;
              any = true;
            }
    report.notes.push_back("smallest path dinv over decorated area-0 paths: " + std::to_string(lowest));
  } else if (suite == "insertion-lemmas") {
    insertion_tasks(n_max, options, tasks);
  } else if (suite == "quasisym") {
    quasisym_tasks(n_max, tasks);
  } else if (suite == "models") {
    models_tasks(n_max, table, tasks);
    const auto counts = zero_sminv_segmented_counts(std::min(n_max, 8));
    std::string seen = "zero-sminv segmented permutations for n=0.." + std::to_string(counts.size() - 1) + ":";
    for (auto c : counts) seen += " " + std::to_string(c);
    report.notes.push_back(seen);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  report.cases = run_tasks(tasks, options.threads);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_verify(std::string_view selector, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  if (selector == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, options));
  } else {
    out.push_back(run_suite(selector, options));
  }
  return out;
}

// ---- tables ---------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> kl_order(int n, int k, int l) {
  if (k >= 0 && l >= 0 && n > 0 && k + l >= n)
    throw std::invalid_argument("k + l must be smaller than n (got k=" + std::to_string(k) + ", l=" + std::to_string(l) + ", n=" + std::to_string(n) + ")");
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d < std::max(n, 1); ++d)
    for (int kk = d; kk >= 0; --kk) {
      const int ll = d - kk;
      if ((k < 0 || kk == k) && (l < 0 || ll == l)) out.emplace_back(kk, ll);
    }
  return out;
}

}  // namespace

std::vector<TableRow> h_coefficient_rows(int n, SfCoefficientTable& table, int k, int l) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<TableRow> rows;
  const auto parts = partitions_of(n);
  for (const auto& [kk, ll] : kl_order(n, k, l))
    for (const auto& mu : parts) rows.push_back({n, kk, ll, mu, sf_h_coefficient(n, kk, ll, mu, table)});
  return rows;
}

std::vector<TableRow> hilbert_rows(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<TableRow> rows;
  const WeakComposition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
  for (const auto& [k, l] : kl_order(n, -1, -1)) rows.push_back({n, k, l, ones, standard_q_count(n, k, l)});
  return rows;
}

}  // namespace smirnov
