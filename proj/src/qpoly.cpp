#include "smirnov/qpoly.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace smirnov {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("QPolynomial: negative coefficient");
  }
  trim();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::from_counts(std::span<const std::uint64_t> counts) {
  QPolynomial p;
  p.coeffs_.reserve(counts.size());
  for (auto c : counts) p.coeffs_.emplace_back(c);
  p.trim();
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long QPolynomial::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

BigInt QPolynomial::coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPolynomial out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  QPolynomial out;
  out.coeffs_.assign(k, BigInt(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (d == 0) {
      s += c.str();
      continue;
    }
    if (c != 1) s += c.str();
    s += 'q';
    if (d > 1) s += '^' + std::to_string(d);
  }
  return s;
}

QPolynomial QPolynomial::parse(std::string_view text) {
  QPolynomial out;
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw std::invalid_argument("QPolynomial::parse: empty input");
  if (t == "0") return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t end = t.find('+', pos);
    if (end == std::string::npos) end = t.size();
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("QPolynomial::parse: empty term in '" + t + "'");
    std::size_t qpos = term.find('q');
    BigInt coeff = 1;
    std::size_t deg = 0;
    std::string cpart = qpos == std::string::npos ? term : term.substr(0, qpos);
    if (!cpart.empty()) {
      for (char ch : cpart) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("QPolynomial::parse: bad coefficient '" + cpart + "'");
      }
      coeff = BigInt(cpart);
    }
    if (qpos != std::string::npos) {
      std::string rest = term.substr(qpos + 1);
      if (rest.empty()) {
        deg = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2) throw std::invalid_argument("QPolynomial::parse: bad exponent '" + term + "'");
        for (std::size_t i = 1; i < rest.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(rest[i])))
            throw std::invalid_argument("QPolynomial::parse: bad exponent '" + term + "'");
        }
        deg = std::stoul(rest.substr(1));
      }
    }
    out += QPolynomial::monomial(deg, coeff);
    pos = end + 1;
    if (end == t.size()) break;
  }
  return out;
}

namespace {

// Pascal rows of Gaussian binomials, grown on demand:
// [a,b] = [a-1,b-1] + q^b [a-1,b].
class QBinomialCache {
 public:
  QPolynomial get(std::size_t a, std::size_t b) {
    {
      std::shared_lock lock(mutex_);
      if (a < rows_.size()) return rows_[a][b];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= a) {
      const std::size_t n = rows_.size();
      std::vector<QPolynomial> row(n + 1);
      row[0] = QPolynomial::one();
      row[n] = QPolynomial::one();
      for (std::size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].shifted(k);
      rows_.push_back(std::move(row));
    }
    return rows_[a][b];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<QPolynomial>> rows_;
};

QBinomialCache& binomial_cache() {
  static QBinomialCache cache;
  return cache;
}

}  // namespace

QPolynomial q_binomial(long a, long b) {
  if (b < 0 || b > a) return {};
  return binomial_cache().get(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

QPolynomial q_int(long n) {
  if (n <= 0) return {};
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPolynomial q_power_binom2(long x) {
  if (x < 0) throw std::invalid_argument("q_power_binom2: negative argument");
  return QPolynomial::monomial(static_cast<std::size_t>(x * (x - 1) / 2));
}

}  // namespace smirnov
