#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smirnov/qengine.hpp"

namespace smirnov {

namespace {

// Flat tally indexed by (ascents, descents, statistic value).
struct Tally {
  std::size_t n;
  std::size_t degrees;
  std::vector<std::uint64_t> counts;

  explicit Tally(std::size_t n_) : n(n_), degrees(n_ * (n_ > 0 ? n_ - 1 : 0) + 1), counts(n_ * n_ * degrees + degrees, 0) {}

  void add(std::size_t k, std::size_t l, std::size_t d) { counts[(k * n + l) * degrees + d] += 1; }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }

  KlTable to_table() const {
    KlTable out;
    if (n == 0) {
      out.emplace(std::pair{0, 0}, QPolynomial::one());
      return out;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; k + l < n; ++l) {
        const std::size_t base = (k * n + l) * degrees;
        auto p = QPolynomial::from_counts(std::span<const std::uint64_t>(counts.data() + base, degrees));
        if (!p.is_zero()) out.emplace(std::pair{static_cast<int>(k), static_cast<int>(l)}, std::move(p));
      }
    }
    return out;
  }
};

Composition shape_of_mask(std::size_t n, unsigned mask) {
  std::vector<int> parts;
  int len = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (mask & (1u << (n - 2 - p))) {
      parts.push_back(len);
      len = 1;
    } else {
      ++len;
    }
  }
  parts.push_back(len);
  return Composition(std::move(parts));
}

// Visits every admissible segmentation of one letter arrangement.
void tally_arrangement(const std::vector<Letter>& letters, Statistic stat, Tally& t) {
  const std::size_t n = letters.size();
  unsigned forced = 0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (letters[p] == letters[p + 1]) forced |= 1u << (n - 2 - p);
  }
  const unsigned free_bits = ((1u << (n - 1)) - 1) & ~forced;
  // Walk the submasks of free_bits; each one plus the forced bits is a shape.
  unsigned sub = free_bits;
  while (true) {
    const SegmentedSmirnovWord w(letters, shape_of_mask(n, sub | forced));
    t.add(w.ascent_count(), w.descent_count(), statistic(w, stat));
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }
}

void check_size(std::size_t n) {
  if (n > 16) throw std::invalid_argument("enumerative_table: content too large for exhaustive enumeration");
}

}  // namespace

KlTable enumerative_table_serial(const WeakComposition& mu, Statistic stat) {
  auto letters = mu.letter_multiset();
  const std::size_t n = letters.size();
  check_size(n);
  Tally t(n);
  if (n == 0) return t.to_table();
  do {
    tally_arrangement(letters, stat, t);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return t.to_table();
}

KlTable enumerative_table(const WeakComposition& mu, Statistic stat, int threads) {
  const auto base = mu.letter_multiset();
  const std::size_t n = base.size();
  check_size(n);
  if (n == 0) return Tally(0).to_table();
  const auto perms = multiset_permutations(base);
  const long count = static_cast<long>(perms.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  Tally total(n);
#pragma omp parallel num_threads(workers)
  {
    Tally local(n);
#pragma omp for schedule(dynamic, 16) nowait
    for (long p = 0; p < count; ++p) tally_arrangement(perms[static_cast<std::size_t>(p)], stat, local);
#pragma omp critical(smirnov_tally_merge)
    total.merge(local);
  }
  return total.to_table();
}

}  // namespace smirnov
