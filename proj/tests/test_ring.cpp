#include "doctest.h"
#include "flowloop/error.hpp"
#include "flowloop/ring.hpp"
#include "random.hpp"

using namespace flowloop;
using flowloop::testing::random_laurent;
using flowloop::testing::random_series;
using flowloop::testing::uniform;

namespace {

QLaurent q(int twice, long c = 1) { return QLaurent::monomial(twice, c); }

XSeries series(std::initializer_list<std::pair<int, QLaurent>> terms, int order_twice) {
  XSeries s(order_twice);
  for (const auto& [e, c] : terms) s.add_term(e, c);
  return s;
}

}  // namespace

TEST_CASE("half integers") {
  CHECK(HalfInt::from_twice(3).to_string() == "3/2");
  CHECK(HalfInt::from_twice(-1).to_string() == "-1/2");
  CHECK(HalfInt::from_int(-2).to_string() == "-2");
  CHECK((HalfInt::from_twice(3) + HalfInt::from_twice(1)).as_int() == 2);
  CHECK(HalfInt::from_twice(1) < HalfInt::from_int(1));
}

TEST_CASE("laurent arithmetic") {
  const QLaurent a = QLaurent::from_terms({{2, 1}, {0, 1}, {2, 2}, {-2, 0}});
  CHECK(a.terms().size() == 2);
  CHECK(a.coefficient(2) == 3);
  CHECK((a - a).is_zero());
  CHECK(q(1) * q(-1) == QLaurent(1));
  CHECK((QLaurent(1) + q(2)) * (QLaurent(1) - q(2)) == QLaurent(1) - q(4));
  CHECK(a.inverted().coefficient(-2) == 3);
  CHECK(a.at_one() == 4);
  CHECK(q(3, -2).is_unit() == false);
  CHECK(q(3, -1).is_unit());
}

TEST_CASE("big coefficients stay exact") {
  QLaurent p = QLaurent(1) + q(2);
  QLaurent acc = 1;
  for (int k = 0; k < 100; ++k) acc *= p;
  CHECK(acc.at_one() == mpz_class("1267650600228229401496703205376"));
  CHECK(acc.coefficient(100) == mpz_class("100891344545564193334812497256"));
}

TEST_CASE("exact division") {
  const QLaurent num = QLaurent(1) - q(10);
  const QLaurent den = QLaurent(1) - q(2);
  CHECK(QLaurent::divide_exact(num, den) == QLaurent::from_terms({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}));
  CHECK_THROWS_AS(QLaurent::divide_exact(QLaurent(1) + q(4), den), InternalError);
  CHECK_THROWS_AS(QLaurent::divide_exact(QLaurent(3), QLaurent(2)), InternalError);
}

TEST_CASE("laurent rendering") {
  CHECK(QLaurent().canonical() == "0");
  CHECK(QLaurent::from_terms({{-2, 1}, {0, -3}}).canonical() == "1*q^(-2/2) - 3*q^(0/2)");
  CHECK(QLaurent::from_terms({{-2, 1}, {0, 3}, {2, 1}}).pretty() == "q^-1 + 3 + q");
  CHECK(q(3, -2).pretty() == "-2*q^(3/2)");
  CHECK(q(4).pretty() == "q^2");
}

TEST_CASE("ring axioms on random laurent polynomials") {
  for (int trial = 0; trial < 200; ++trial) {
    const QLaurent a = random_laurent(), b = random_laurent(), c = random_laurent();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).inverted() == a.inverted() * b.inverted());
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    if (!b.is_zero()) CHECK(QLaurent::divide_exact(a * b, b) == a);
  }
}

TEST_CASE("series truncation") {
  XSeries s(4);
  s.add_term(6, 1);
  CHECK(s.is_zero());
  const XSeries one_minus_x = series({{0, 1}, {2, -1}}, 8);
  const XSeries geometric = one_minus_x.inverse();
  CHECK(geometric == series({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}, 8));
  CHECK(geometric.pretty() == "1 + x + x^2 + x^3 + x^4 + O(x^5)");
  // A factor starting at x^1 extends the order of the product.
  const XSeries shifted = geometric * XSeries::monomial(2, 1);
  CHECK(shifted.order_twice() == 10);
  CHECK(series({{1, q(1)}}, 3).pretty() == "q^(1/2)*x^(1/2) + O(x^2)");
  CHECK(series({{0, 1}, {2, QLaurent(1) + q(2)}}, 4).canonical() ==
        "(1*q^(0/2))*x^(0/2) + (1*q^(0/2) + 1*q^(2/2))*x^(2/2) + O(x^(6/2))");
}

TEST_CASE("series inverse on random unit series") {
  for (int trial = 0; trial < 100; ++trial) {
    XSeries s = random_series(12);
    s.add_term(0, q(2 * uniform(-3, 3), uniform(0, 1) ? 1 : -1) - s.coefficient(0));
    CHECK(s * s.inverse() == XSeries::one(12));
  }
}

TEST_CASE("series ring properties") {
  for (int trial = 0; trial < 100; ++trial) {
    const XSeries a = random_series(10), b = random_series(10), c = random_series(10);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).at_q_one() == a.at_q_one() * b.at_q_one());
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(qbinom(4, 2) == QLaurent::from_terms({{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}));
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(5, -1).is_zero());
  CHECK(qbinom(7, 0) == QLaurent(1));
  // [-1; k] = (-1)^k q^{-k(k+1)/2}
  for (int k = 0; k <= 6; ++k) CHECK(qbinom(-1, k) == q(-k * (k + 1), k % 2 ? -1 : 1));
  CHECK(generalized_binomial(-3, 2) == 6);
  CHECK(qtrinom(4, 1, 2, 1) == qbinom(3, 2) * qbinom(4, 1));
  CHECK(qtrinom(4, 1, 2, 2).is_zero());
}

TEST_CASE("gaussian binomial properties") {
  for (int n = -5; n <= 10; ++n)
    for (int k = 1; k <= 6; ++k) {
      CHECK(qbinom(n, k) == qbinom(n - 1, k) + qbinom(n - 1, k - 1).shifted(2 * (n - k)));
      CHECK(qbinom(n, k).at_one() == generalized_binomial(n, k));
    }
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(qbinom_inv(n, k) == qbinom(n, k).shifted(-2 * k * (n - k)));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        const int n = a + b + c;
        CHECK(qtrinom(n, a, b, c) == qtrinom(n, c, b, a));
        CHECK(qtrinom(n, a, b, c) == qtrinom(n, b, a, c));
      }
}

TEST_CASE("bifurcation identities") {
  for (int f : {-2, -1, 0, 1, 2, 4, 7}) {
    const Framing fr{HalfInt::from_twice(f)};
    CHECK(saddle_node_identity(fr, HalfInt::from_int(12)) == XSeries::one(24));
    const auto [a, b] = period_doubling_identity(fr, HalfInt::from_int(12));
    CHECK(a == b);
    CHECK(a.coefficient(2) == -q(f));
  }
}
