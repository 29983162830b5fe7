#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "smirnov/core.hpp"
#include "smirnov/qpoly.hpp"
#include "smirnov/statistics.hpp"

namespace smirnov {

struct SfKey {
  int n;
  int k;
  int l;
  std::vector<int> mu;
  friend auto operator<=>(const SfKey&, const SfKey&) = default;
};

// Memo for the h_mu-coefficients of SF(n,k,l). Readers share a lock; an
// insertion takes it exclusively. Two workers racing on one key compute
// the same value, so the loser's insert is simply dropped.
class SfCoefficientTable {
 public:
  // With sort_keys off the recursion runs on mu exactly as given, which is
  // what the symmetry check needs.
  explicit SfCoefficientTable(bool sort_keys = true) : sort_keys_(sort_keys) {}

  bool sort_keys() const { return sort_keys_; }
  std::optional<QPolynomial> find(const SfKey& key) const;
  void insert(const SfKey& key, const QPolynomial& value);
  std::size_t size() const;
  void clear();
  std::map<SfKey, QPolynomial> snapshot() const;

  void save_json(std::ostream& out) const;
  // Merges entries from a dump. Throws std::runtime_error on malformed input
  // or when the dump was written with a different key mode.
  void load_json(std::istream& in);

 private:
  bool sort_keys_;
  mutable std::shared_mutex mutex_;
  std::map<SfKey, QPolynomial> memo_;
};

// <SF(n,k,l), h_mu> via the strip-the-largest-letter recursion.
// Throws std::invalid_argument when k + l >= n > 0, k or l is negative, or
// mu does not sum to n.
QPolynomial sf_h_coefficient(int n, int k, int l, const WeakComposition& mu, SfCoefficientTable& table);
QPolynomial sf_h_coefficient(int n, int k, int l, const WeakComposition& mu);

// SW_q(1^n, k, l) by the [n-k-l]_q four-term recursion.
QPolynomial standard_q_count(int n, int k, int l);

using KlTable = std::map<std::pair<int, int>, QPolynomial>;

// standard_q_count(n,k,l) for every k + l < n.
KlTable hilbert_table(int n);

// Sum of q^stat(w) over SW(mu,k,l).
QPolynomial enumerative_q_sum(const WeakComposition& mu, int k, int l, Statistic stat);

// Every nonzero SW_q(mu,k,l) at once, keyed by (k,l). The parallel kernel
// distributes multiset permutations over OpenMP threads (threads <= 0 means
// the runtime default); the serial kernel is the reference it is tested
// against.
KlTable enumerative_table(const WeakComposition& mu, Statistic stat, int threads = 0);
KlTable enumerative_table_serial(const WeakComposition& mu, Statistic stat);

// Worker count from SMIRNOV_THREADS, or 0 when unset or unparsable.
int threads_from_env();

}  // namespace smirnov
