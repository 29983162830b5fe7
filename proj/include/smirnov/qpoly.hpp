#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace smirnov {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in q with nonnegative arbitrary-precision coefficients.
// Every quantity in this library is a counting series, so subtraction is
// deliberately absent. Trailing zero coefficients are always trimmed.
class QPolynomial {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return constant(1); }
  static QPolynomial constant(const BigInt& c);
  // c * q^degree
  static QPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  // Builds from machine-word tallies indexed by degree.
  static QPolynomial from_counts(std::span<const std::uint64_t> counts);

  bool is_zero() const { return coeffs_.empty(); }
  // kZeroDegree for the zero polynomial.
  long degree() const;
  BigInt coefficient(std::size_t d) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  BigInt at_one() const;
  BigInt evaluate(const BigInt& q) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  // multiply by q^k
  QPolynomial shifted(std::size_t k) const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Ascending display form: "3+q", "1+2q^2+q^3", "0".
  std::string to_string() const;
  static QPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Gaussian binomial [a choose b]_q. Zero when b < 0 or b > a.
QPolynomial q_binomial(long a, long b);

// 1 + q + ... + q^{n-1}; zero for n <= 0.
QPolynomial q_int(long n);

// q^{x(x-1)/2} for x >= 0.
QPolynomial q_power_binom2(long x);

}  // namespace smirnov
