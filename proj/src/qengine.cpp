#include "smirnov/qengine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace smirnov {

std::optional<QPolynomial> SfCoefficientTable::find(const SfKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void SfCoefficientTable::insert(const SfKey& key, const QPolynomial& value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
}

std::size_t SfCoefficientTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void SfCoefficientTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::map<SfKey, QPolynomial> SfCoefficientTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return memo_;
}

void SfCoefficientTable::save_json(std::ostream& out) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : snapshot()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : value.coefficients()) coeffs.push_back(c.str());
    entries.push_back({{"n", key.n}, {"k", key.k}, {"l", key.l}, {"mu", key.mu}, {"coeffs", coeffs}});
  }
  nlohmann::json doc = {{"sorted_keys", sort_keys_}, {"entries", entries}};
  out << doc.dump(1) << '\n';
}

void SfCoefficientTable::load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("sorted_keys").get<bool>() != sort_keys_) throw std::runtime_error("memo file key mode does not match this table");
    for (const auto& e : doc.at("entries")) {
      SfKey key{e.at("n").get<int>(), e.at("k").get<int>(), e.at("l").get<int>(), e.at("mu").get<std::vector<int>>()};
      std::vector<BigInt> coeffs;
      for (const auto& c : e.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
      insert(key, QPolynomial(std::move(coeffs)));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("malformed memo file: ") + ex.what());
  }
}

namespace {

QPolynomial delta(int k, int l) { return (k == 0 && l == 0) ? QPolynomial::one() : QPolynomial::zero(); }

QPolynomial sf_rec(int n, int k, int l, const WeakComposition& mu, SfCoefficientTable& table) {
  if (n < 0 || k < 0 || l < 0) return {};
  if (n == 0) return delta(k, l);
  if (k + l >= n) return {};

  const WeakComposition key_mu = table.sort_keys() ? mu.sorted_partition() : mu;
  const SfKey key{n, k, l, std::vector<int>(key_mu.parts().begin(), key_mu.parts().end())};
  if (auto hit = table.find(key)) return *hit;

  const long j = key_mu.parts().back();
  const WeakComposition rest = key_mu.without_last();
  const long B = n - k - l;
  QPolynomial total;
  for (long r = 0; r <= j; ++r) {
    for (long a = 0; a <= j; ++a) {
      const QPolynomial sub = sf_rec(n - static_cast<int>(j), k - static_cast<int>(r), l - static_cast<int>(a), rest, table);
      if (sub.is_zero()) continue;
      // Blocks of the word left after all copies of the largest letter go.
      const long sub_blocks = B - (j - r - a);
      for (long i = 0; i <= std::min(r, a); ++i) {
        const long singles = j - r - a + i;
        QPolynomial term = q_binomial(B, singles);
        if (term.is_zero()) continue;
        term *= q_power_binom2(a - i) * q_binomial(B - singles, a - i);
        term *= q_power_binom2(r - i) * q_binomial(B - singles, r - i);
        // The empty word offers no separators yet still admits the empty choice.
        term *= (sub_blocks == 0 && i == 0) ? QPolynomial::one() : q_binomial(sub_blocks - 1, i);
        if (term.is_zero()) continue;
        total += term * sub;
      }
    }
  }
  table.insert(key, total);
  return total;
}

}  // namespace

QPolynomial sf_h_coefficient(int n, int k, int l, const WeakComposition& mu, SfCoefficientTable& table) {
  if (k < 0 || l < 0) throw std::invalid_argument("sf_h_coefficient: k and l must be nonnegative");
  if (mu.sum() != n) {
    throw std::invalid_argument("sf_h_coefficient: mu " + mu.to_string() + " sums to " + std::to_string(mu.sum()) +
                                ", not n = " + std::to_string(n));
  }
  if (n > 0 && k + l >= n) {
    throw std::invalid_argument("sf_h_coefficient: requires k + l < n (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  }
  return sf_rec(n, k, l, mu, table);
}

QPolynomial sf_h_coefficient(int n, int k, int l, const WeakComposition& mu) {
  SfCoefficientTable table;
  return sf_h_coefficient(n, k, l, mu, table);
}

QPolynomial standard_q_count(int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) return {};
  // memo[m][a][d] = SW_q(1^m, a, d)
  std::vector<std::vector<std::vector<QPolynomial>>> memo(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    auto& layer = memo[static_cast<std::size_t>(m)];
    layer.assign(static_cast<std::size_t>(k) + 1, std::vector<QPolynomial>(static_cast<std::size_t>(l) + 1));
    for (int a = 0; a <= k; ++a) {
      for (int d = 0; d <= l; ++d) {
        if (m == 0) {
          layer[a][d] = delta(a, d);
          continue;
        }
        if (a + d >= m) continue;
        const auto& prev = memo[static_cast<std::size_t>(m) - 1];
        QPolynomial s = prev[a][d];
        if (d > 0) s += prev[a][d - 1];
        if (a > 0) s += prev[a - 1][d];
        if (a > 0 && d > 0) s += prev[a - 1][d - 1];
        layer[a][d] = q_int(m - a - d) * s;
      }
    }
  }
  return memo[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

KlTable hilbert_table(int n) {
  KlTable out;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; k + l < n; ++l) out.emplace(std::pair{k, l}, standard_q_count(n, k, l));
  }
  return out;
}

QPolynomial enumerative_q_sum(const WeakComposition& mu, int k, int l, Statistic stat) {
  if (k < 0 || l < 0) return {};
  const KlTable t = enumerative_table(mu, stat);
  auto it = t.find({k, l});
  return it == t.end() ? QPolynomial::zero() : it->second;
}

int threads_from_env() {
  const char* v = std::getenv("SMIRNOV_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  char* end = nullptr;
  const long t = std::strtol(v, &end, 10);
  if (*end != '\0' || t <= 0 || t > 4096) return 0;
  return static_cast<int>(t);
}

}  // namespace smirnov
