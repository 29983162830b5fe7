#include <doctest.h>

#include "oracles.hpp"
#include "smirnov/qpoly.hpp"

using namespace smirnov;

TEST_CASE("polynomial arithmetic and display") {
  const auto p = QPolynomial::parse("1+2q+q^3");
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(1) == 2);
  CHECK(p.coefficient(2) == 0);
  CHECK(p.at_one() == 4);
  CHECK(p.evaluate(2) == 13);
  CHECK(p.to_string() == "1+2q+q^3");
  CHECK((p + QPolynomial::one()).to_string() == "2+2q+q^3");
  CHECK((p * QPolynomial::monomial(2)).to_string() == "q^2+2q^3+q^5");
  CHECK(p.shifted(1) == p * QPolynomial::monomial(1));
  CHECK(QPolynomial::zero().to_string() == "0");
  CHECK(QPolynomial::zero().degree() == QPolynomial::kZeroDegree);
  CHECK((QPolynomial::zero() * p).is_zero());
  CHECK(QPolynomial::parse(QPolynomial::parse("3+q").to_string()) == QPolynomial::parse("3+q"));
  CHECK(QPolynomial(std::vector<BigInt>{0, 1, 0, 0}).to_string() == "q");
}

TEST_CASE("parse rejects malformed terms") {
  CHECK_THROWS_AS(QPolynomial::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(QPolynomial::parse("1++q"), std::invalid_argument);
  CHECK_THROWS_AS(QPolynomial::parse("q^"), std::invalid_argument);
  CHECK_THROWS_AS(QPolynomial::parse("2x"), std::invalid_argument);
}

TEST_CASE("big coefficients stay exact") {
  QPolynomial p = QPolynomial::parse("1+q");
  QPolynomial acc = QPolynomial::one();
  for (int i = 0; i < 100; ++i) acc *= p;
  // central coefficient of (1+q)^100
  CHECK(acc.coefficient(50).str() == "100891344545564193334812497256");
  CHECK(acc.at_one() == BigInt(1) << 100);
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(3, 2).to_string() == "1+q+q^2");
  CHECK(q_binomial(4, 2).to_string() == "1+q+2q^2+q^3+q^4");
  CHECK(q_binomial(5, 0) == QPolynomial::one());
  CHECK(q_binomial(2, 3).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_int(4).to_string() == "1+q+q^2+q^3");
  CHECK(q_int(0).is_zero());
  CHECK(q_power_binom2(4) == QPolynomial::monomial(6));
  CHECK(q_power_binom2(0) == QPolynomial::one());
}

TEST_CASE("[4,2]_q times [2]_q[1]_q equals [4]_q[3]_q") {
  // Clearing denominators of (q^4-1)(q^3-1)/((q^2-1)(q-1)).
  CHECK(q_binomial(4, 2) * q_int(2) * q_int(1) == q_int(4) * q_int(3));
}

TEST_CASE("q-binomials match inversion counts of 0/1 words") {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= a; ++b) CHECK(q_binomial(a, b) == oracle::qbinom_by_inversions(a, b));
}

TEST_CASE("q-Pascal rule") {
  for (long a = 1; a <= 15; ++a)
    for (long b = 1; b < a; ++b) CHECK(q_binomial(a, b) == q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shifted(static_cast<std::size_t>(b)));
}
